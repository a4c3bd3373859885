#include "uniaff/levi.hpp"

#include "uniaff/polynomial.hpp"

namespace uniaff {

Subspace center_of(const LieAlgebra& g, const Subspace& s) {
  const int r = s.dim();
  // x = sum c_i b_i is central iff [x, b_j] = 0 for all j: a linear
  // system in c with dim(g) equations per j
  Matrix sys(r * g.dim(), r);
  for (int j = 0; j < s.dim(); ++j) {
    for (int i = 0; i < r; ++i) {
      Element bij = bracket(g, Element{s.basis_row(i)}, Element{s.basis_row(j)});
      for (int k = 0; k < g.dim(); ++k)
        sys.at(j * g.dim() + k, i) = bij.coords[static_cast<std::size_t>(k)];
    }
  }
  Subspace coeff_kernel = kernel(sys);
  std::vector<Vec> rows;
  for (int i = 0; i < coeff_kernel.dim(); ++i) {
    Vec c = coeff_kernel.basis_row(i);
    Vec v = vec_zero(g.dim());
    for (int t = 0; t < r; ++t) {
      if (is_zero(c[static_cast<std::size_t>(t)])) continue;
      Vec bt = s.basis_row(t);
      for (int k = 0; k < g.dim(); ++k)
        v[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(t)] * bt[static_cast<std::size_t>(k)];
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(g.dim(), rows);
}

LieAlgebra subalgebra_structure(const LieAlgebra& g, const Subspace& s) {
  const int r = s.dim();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) names.push_back("b" + std::to_string(i));
  std::map<std::pair<int, int>, SparseVec> brackets;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Element b = bracket(g, Element{s.basis_row(i)}, Element{s.basis_row(j)});
      auto coords = s.coordinates(b.coords);
      if (!coords) throw std::invalid_argument("subspace is not closed under the bracket");
      SparseVec terms;
      for (int k = 0; k < r; ++k)
        if (!is_zero((*coords)[static_cast<std::size_t>(k)]))
          terms.emplace_back(k, (*coords)[static_cast<std::size_t>(k)]);
      if (!terms.empty()) brackets[{i, j}] = std::move(terms);
    }
  return LieAlgebra(r, std::move(names), std::move(brackets));
}

ValidationReport validate_levi(const LieAlgebra& g, const LeviData& ld) {
  ValidationReport report;
  auto fail = [&report](const std::string& msg) { report.failures.push_back(msg); };

  if (ld.levi.ambient_dim() != g.dim() || ld.nilradical.ambient_dim() != g.dim()) {
    fail("levi/nilradical: ambient dimension does not match the algebra");
    return report;
  }
  if (ld.levi.dim() + ld.nilradical.dim() != g.dim() ||
      subspace_sum(ld.levi, ld.nilradical).dim() != g.dim()) {
    fail("levi/nilradical: spans do not form a direct sum decomposition of g");
    return report;
  }
  for (int i = 0; i < ld.levi.dim(); ++i)
    for (int j = i + 1; j < ld.levi.dim(); ++j)
      if (!ld.levi.contains(bracket(g, Element{ld.levi.basis_row(i)}, Element{ld.levi.basis_row(j)}).coords)) {
        fail("levi: not a subalgebra");
        return report;
      }
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < ld.nilradical.dim(); ++j)
      if (!ld.nilradical.contains(bracket(g, g.basis_element(i), Element{ld.nilradical.basis_row(j)}).coords)) {
        fail("nilradical: not an ideal of g");
        return report;
      }
  if (!is_nilpotent_subalgebra(g, ld.nilradical)) {
    fail("nilradical: not nilpotent");
    return report;
  }

  Subspace z = center_of(g, ld.levi);
  Subspace dl = derived_subalgebra(g, ld.levi);
  if (z.dim() + dl.dim() != ld.levi.dim() || subspace_sum(z, dl).dim() != ld.levi.dim()) {
    fail("levi: center and derived subalgebra do not split the levi part");
    return report;
  }
  if (dl.dim() > 0) {
    LieAlgebra der = subalgebra_structure(g, dl);
    if (rref(killing_form(der)).rank != dl.dim()) {
      fail("levi: Killing form of [levi,levi] is degenerate");
      return report;
    }
  }
  for (int i = 0; i < z.dim(); ++i) {
    Polynomial mp = minimal_polynomial(ad_matrix(g, Element{z.basis_row(i)}));
    if (!is_squarefree(mp)) {
      fail("levi: center acts non-semisimply");
      return report;
    }
  }
  return report;
}

Decomposition decompose(const LieAlgebra& g, const LeviData& ld, const Element& x) {
  if (x.dim() != g.dim()) throw std::invalid_argument("element dimension does not match algebra");
  const int r = ld.levi.dim(), s = ld.nilradical.dim();
  Matrix stacked(g.dim(), r + s);
  for (int j = 0; j < r; ++j) stacked.set_col(j, ld.levi.basis_row(j));
  for (int j = 0; j < s; ++j) stacked.set_col(r + j, ld.nilradical.basis_row(j));
  auto coords = solve(stacked, x.coords);
  if (!coords) throw std::invalid_argument("element does not lie in levi + nilradical");
  Vec xl = vec_zero(g.dim()), xn = vec_zero(g.dim());
  for (int j = 0; j < r; ++j) {
    Vec b = ld.levi.basis_row(j);
    for (int k = 0; k < g.dim(); ++k)
      xl[static_cast<std::size_t>(k)] += (*coords)[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k)];
  }
  for (int j = 0; j < s; ++j) {
    Vec b = ld.nilradical.basis_row(j);
    for (int k = 0; k < g.dim(); ++k)
      xn[static_cast<std::size_t>(k)] += (*coords)[static_cast<std::size_t>(r + j)] * b[static_cast<std::size_t>(k)];
  }
  return Decomposition{Element{std::move(xl)}, Element{std::move(xn)}};
}

bool is_nilpotent_element(const LieAlgebra& g, const LeviData& ld, const Element& x) {
  Matrix ad = ad_matrix(g, x);
  Matrix power = Matrix::identity(g.dim());
  bool nilpotent = g.dim() == 0;
  for (int i = 1; i <= g.dim(); ++i) {
    power = power * ad;
    if (power.is_zero()) {
      nilpotent = true;
      break;
    }
  }
  if (!nilpotent) return false;

  Decomposition d = decompose(g, ld, x);
  Subspace z = center_of(g, ld.levi);
  Subspace dl = derived_subalgebra(g, ld.levi);
  // split x_l across z(l) (+) [l,l] and require a vanishing z-part
  const int zr = z.dim(), dr = dl.dim();
  Matrix stacked(g.dim(), zr + dr);
  for (int j = 0; j < zr; ++j) stacked.set_col(j, z.basis_row(j));
  for (int j = 0; j < dr; ++j) stacked.set_col(zr + j, dl.basis_row(j));
  auto coords = solve(stacked, d.levi_part.coords);
  if (!coords) throw std::invalid_argument("levi part does not split over z(l) + [l,l]; run validate_levi");
  for (int j = 0; j < zr; ++j)
    if (!is_zero((*coords)[static_cast<std::size_t>(j)])) return false;
  return true;
}

}  // namespace uniaff
