#include "uniaff/engine.hpp"

namespace uniaff {

Element conjugate_by_exp(const LieAlgebra& g, const Element& y, const Element& x) {
  Matrix ad = ad_matrix(g, y);
  return Element{exp_nilpotent(ad).apply(x.coords)};
}

Vec build_section_functional(const Matrix& a, const Vec& vbar) {
  if (static_cast<int>(vbar.size()) != a.rows())
    throw std::invalid_argument("vector length does not match matrix rows");
  Subspace left_kernel = kernel(a.transpose());
  for (int i = 0; i < left_kernel.dim(); ++i) {
    Vec w = left_kernel.basis_row(i);
    Rational c = vec_dot(w, vbar);
    if (!is_zero(c)) return vec_scale(1 / c, w);
  }
  throw std::invalid_argument("no section functional: vector lies in the image");
}

StepResult step_level(const LieAlgebra& g, const LeviData& ld, const FlagLevel& level,
                      const Element& x) {
  Decomposition d = decompose(g, ld, x);
  if (!level.sub.contains(d.nil_part.coords))
    throw std::logic_error("step_level: nilradical component escapes the level subalgebra");

  LevelRecord rec;
  rec.level = level.index;
  rec.action = induced_action(g, level, d.levi_part);
  rec.action_image = image(rec.action);
  rec.vbar = project(g, level, d.nil_part);

  if (auto ybar = solve(rec.action, rec.vbar)) {
    rec.branch = Branch::conjugate;
    rec.y = lift(g, level, *ybar);
    rec.phi = Vec{};
    Element moved = conjugate_by_exp(g, rec.y, x);
    Decomposition dm = decompose(g, ld, moved);
    if (!(dm.levi_part == d.levi_part))
      throw std::logic_error("step_level: Levi component changed under conjugation");
    if (!level.next.contains(dm.nil_part.coords))
      throw std::logic_error("step_level: conjugation failed to push the element deeper");
    return StepResult{std::move(rec), std::move(moved)};
  }

  rec.branch = Branch::section;
  rec.y = g.zero_element();
  rec.phi = build_section_functional(rec.action, rec.vbar);
  return StepResult{std::move(rec), x};
}

Verdict decide(const LieAlgebra& g, const LeviData& ld, const Element& x) {
  if (auto r = validate_algebra(g); !r.ok())
    throw std::invalid_argument("invalid algebra: " + r.first());
  if (auto r = validate_levi(g, ld); !r.ok())
    throw std::invalid_argument("invalid Levi data: " + r.first());
  if (x.is_zero())
    throw std::invalid_argument("H must be one-dimensional: the element is zero");
  if (!is_nilpotent_element(g, ld, x))
    throw std::invalid_argument("element is not nilpotent: H is not unipotent");

  std::vector<FlagLevel> series = derived_series(g, ld.nilradical);

  Verdict verdict;
  Element current = x;
  for (const FlagLevel& level : series) {
    if (level.sub.dim() == 0) break;
    StepResult step = step_level(g, ld, level, current);
    const bool sectioned = step.record.branch == Branch::section;
    verdict.trace.push_back(std::move(step.record));
    current = std::move(step.element);
    if (sectioned) {
      SectionCert cert;
      cert.level = verdict.trace.back().level;
      for (std::size_t k = 0; k + 1 < verdict.trace.size(); ++k)
        cert.conjugators.push_back(verdict.trace[k].y);
      cert.phi = verdict.trace.back().phi;
      verdict.kind = VerdictKind::affine;
      verdict.certificate = std::move(cert);
      return verdict;
    }
  }

  // every level conjugated: the element now lies in the Levi part
  Decomposition d = decompose(g, ld, current);
  if (!d.nil_part.is_zero())
    throw std::logic_error("decide: nilradical component survived the full series");
  EmbeddingCert cert;
  for (const LevelRecord& rec : verdict.trace) cert.conjugators.push_back(rec.y);
  cert.final_element = current;
  verdict.kind = VerdictKind::not_affine;
  verdict.certificate = std::move(cert);
  return verdict;
}

}  // namespace uniaff
