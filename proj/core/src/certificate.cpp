#include "uniaff/certificate.hpp"

namespace uniaff {

namespace {

std::string level_tag(int k) { return "level " + std::to_string(k); }

VerifyResult fail(std::string msg) { return VerifyResult{false, std::move(msg)}; }

/// Canonical section functional: first RREF basis vector of the left
/// kernel pairing nontrivially with vbar, normalized to pairing 1.
/// Deliberately reimplemented here so the verifier shares no code with
/// the engine.
std::optional<Vec> canonical_functional(const Matrix& a, const Vec& vbar) {
  Subspace left_kernel = kernel(a.transpose());
  for (int i = 0; i < left_kernel.dim(); ++i) {
    Vec w = left_kernel.basis_row(i);
    Rational c = vec_dot(w, vbar);
    if (!is_zero(c)) return vec_scale(1 / c, w);
  }
  return std::nullopt;
}

struct ProblemCheck {
  bool ok = false;
  std::string diagnostic;
  std::vector<FlagLevel> series;
};

ProblemCheck check_problem(const LieAlgebra& g, const LeviData& ld, const Element& x) {
  ProblemCheck c;
  if (auto r = validate_algebra(g); !r.ok()) {
    c.diagnostic = "invalid algebra: " + r.first();
    return c;
  }
  if (auto r = validate_levi(g, ld); !r.ok()) {
    c.diagnostic = "invalid Levi data: " + r.first();
    return c;
  }
  if (x.is_zero()) {
    c.diagnostic = "element is zero";
    return c;
  }
  if (!is_nilpotent_element(g, ld, x)) {
    c.diagnostic = "element is not nilpotent";
    return c;
  }
  c.series = derived_series(g, ld.nilradical);
  c.ok = true;
  return c;
}

/// Recomputes the canonical conjugator at one level and advances the
/// element. Returns a diagnostic on mismatch, nullopt on success.
std::optional<std::string> replay_conjugation(const LieAlgebra& g, const LeviData& ld,
                                              const FlagLevel& level, const Element& claimed_y,
                                              Element& current) {
  Decomposition d = decompose(g, ld, current);
  if (!level.sub.contains(d.nil_part.coords))
    return level_tag(level.index) + ": nilradical component does not lie in the level subalgebra";
  Matrix a = induced_action(g, level, d.levi_part);
  Vec vbar = project(g, level, d.nil_part);
  auto ybar = solve(a, vbar);
  if (!ybar)
    return level_tag(level.index) +
           ": certificate claims conjugation but the projected vector is outside the image";
  Element expected = lift(g, level, *ybar);
  if (!(claimed_y == expected))
    return level_tag(level.index) + ": conjugator is not the canonical solution";
  current = Element{exp_nilpotent(ad_matrix(g, claimed_y)).apply(current.coords)};
  return std::nullopt;
}

}  // namespace

VerifyResult verify_embedding(const LieAlgebra& g, const LeviData& ld, const Element& x,
                              const EmbeddingCert& cert) {
  ProblemCheck pc = check_problem(g, ld, x);
  if (!pc.ok) return fail(pc.diagnostic);

  const std::size_t depth = pc.series.size() - 1;  // nonzero levels
  if (cert.conjugators.size() != depth)
    return fail("conjugator count " + std::to_string(cert.conjugators.size()) +
                " does not match derived series depth " + std::to_string(depth));

  Element current = x;
  for (std::size_t k = 0; k < depth; ++k) {
    if (cert.conjugators[k].dim() != g.dim())
      return fail(level_tag(static_cast<int>(k)) + ": conjugator has wrong dimension");
    if (!pc.series[k].sub.contains(cert.conjugators[k].coords))
      return fail(level_tag(static_cast<int>(k)) + ": conjugator does not lie in n^(k)");
    if (auto err = replay_conjugation(g, ld, pc.series[k], cert.conjugators[k], current))
      return fail(*err);
  }

  if (cert.final_element.dim() != g.dim()) return fail("final element has wrong dimension");
  if (!(current == cert.final_element))
    return fail("recomputed conjugation does not reach the claimed final element");
  if (!ld.levi.contains(cert.final_element.coords))
    return fail("final element does not lie in the Levi part");
  if (cert.final_element.is_zero()) return fail("final element is zero");
  return VerifyResult{true, ""};
}

VerifyResult verify_section(const LieAlgebra& g, const LeviData& ld, const Element& x,
                            const SectionCert& cert) {
  ProblemCheck pc = check_problem(g, ld, x);
  if (!pc.ok) return fail(pc.diagnostic);

  const int depth = static_cast<int>(pc.series.size()) - 1;
  if (cert.level < 0 || cert.level >= depth)
    return fail("section level " + std::to_string(cert.level) + " out of range");
  if (static_cast<int>(cert.conjugators.size()) != cert.level)
    return fail("conjugator count does not match the section level");

  Element current = x;
  for (int k = 0; k < cert.level; ++k) {
    const Element& y = cert.conjugators[static_cast<std::size_t>(k)];
    if (y.dim() != g.dim()) return fail(level_tag(k) + ": conjugator has wrong dimension");
    if (!pc.series[static_cast<std::size_t>(k)].sub.contains(y.coords))
      return fail(level_tag(k) + ": conjugator does not lie in n^(k)");
    if (auto err = replay_conjugation(g, ld, pc.series[static_cast<std::size_t>(k)], y, current))
      return fail(*err);
  }

  const FlagLevel& level = pc.series[static_cast<std::size_t>(cert.level)];
  Decomposition d = decompose(g, ld, current);
  if (!level.sub.contains(d.nil_part.coords))
    return fail(level_tag(cert.level) + ": nilradical component does not lie in the level subalgebra");
  Matrix a = induced_action(g, level, d.levi_part);
  Vec vbar = project(g, level, d.nil_part);
  if (solve(a, vbar))
    return fail(level_tag(cert.level) +
                ": projected vector lies in the image; no section exists at this level");
  if (static_cast<int>(cert.phi.size()) != level.quotient_dim())
    return fail("functional has wrong dimension");

  Vec phi_a = a.transpose().apply(cert.phi);  // row vector phi * A
  if (!vec_is_zero(phi_a)) return fail("functional does not vanish on the image of the action");
  if (vec_dot(cert.phi, vbar) != Rational(1))
    return fail("functional does not pair to 1 with the projected vector");
  auto canonical = canonical_functional(a, vbar);
  if (!canonical) return fail("internal: canonical functional missing despite unsolvable system");
  if (!(cert.phi == *canonical)) return fail("functional is not the canonical choice");
  return VerifyResult{true, ""};
}

VerdictKind oracle_decide_class2(const LieAlgebra& g, const LeviData& ld, const Element& x) {
  if (g.dim() > 8) throw std::invalid_argument("oracle: dimension over budget (dim g <= 8)");
  Subspace n1 = derived_subalgebra(g, ld.nilradical);
  for (int i = 0; i < ld.nilradical.dim(); ++i)
    for (int j = 0; j < n1.dim(); ++j)
      if (!bracket(g, Element{ld.nilradical.basis_row(i)}, Element{n1.basis_row(j)}).is_zero())
        throw std::invalid_argument("oracle: nilpotency class exceeds 2");
  if (x.is_zero()) throw std::invalid_argument("oracle: element is zero");

  std::vector<FlagLevel> series = derived_series(g, ld.nilradical);
  const FlagLevel& top = series.front();
  Decomposition d = decompose(g, ld, x);

  // layer split: y = lift(ybar) + y1 with y1 in [n,n]
  Matrix a0 = induced_action(g, top, d.levi_part);
  Vec v0 = project(g, top, d.nil_part);
  auto particular = solve(a0, v0);
  if (!particular) return VerdictKind::affine;
  Element p = lift(g, top, *particular);

  // exp(ad y)(x) closed form: exact at class <= 2
  auto residual = [&](const Element& y) {
    Element yx = bracket(g, y, x);
    Element yyx = bracket(g, y, yx);
    Element image = elem_add(elem_add(x, yx), elem_scale(Rational(1, 2), yyx));
    return decompose(g, ld, image).nil_part;
  };

  Element base = residual(p);
  // remaining freedom: kernel directions on the quotient plus all of
  // [n,n]; every one of them enters the residual linearly
  std::vector<Element> directions;
  Subspace ker = kernel(a0);
  for (int i = 0; i < ker.dim(); ++i) directions.push_back(lift(g, top, ker.basis_row(i)));
  for (int j = 0; j < n1.dim(); ++j) directions.push_back(Element{n1.basis_row(j)});

  Matrix sys(g.dim(), static_cast<int>(directions.size()));
  for (std::size_t c = 0; c < directions.size(); ++c)
    sys.set_col(static_cast<int>(c),
                elem_sub(residual(elem_add(p, directions[c])), base).coords);
  Vec rhs = vec_scale(Rational(-1), base.coords);
  return solve(sys, rhs) ? VerdictKind::not_affine : VerdictKind::affine;
}

}  // namespace uniaff
