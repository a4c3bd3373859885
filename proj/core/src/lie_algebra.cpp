#include "uniaff/lie_algebra.hpp"

namespace uniaff {

Element elem_add(const Element& a, const Element& b) { return Element{vec_add(a.coords, b.coords)}; }
Element elem_sub(const Element& a, const Element& b) { return Element{vec_sub(a.coords, b.coords)}; }
Element elem_scale(const Rational& c, const Element& a) { return Element{vec_scale(c, a.coords)}; }

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names,
                       std::map<std::pair<int, int>, SparseVec> brackets)
    : dim_(dim), names_(std::move(basis_names)), brackets_(std::move(brackets)) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(names_.size()) != dim)
    throw std::invalid_argument("basis name count does not match dimension");
  for (const auto& [pair, terms] : brackets_) {
    auto [i, j] = pair;
    if (i < 0 || j < 0 || i >= dim || j >= dim)
      throw std::invalid_argument("bracket index out of range");
    if (i >= j) throw std::invalid_argument("bracket pairs must have i < j");
    std::vector<bool> seen(static_cast<std::size_t>(dim), false);
    for (const auto& [k, c] : terms) {
      (void)c;
      if (k < 0 || k >= dim) throw std::invalid_argument("structure constant index out of range");
      if (seen[static_cast<std::size_t>(k)])
        throw std::invalid_argument("duplicate structure constant index");
      seen[static_cast<std::size_t>(k)] = true;
    }
  }
}

Vec LieAlgebra::basis_bracket(int i, int j) const {
  Vec v = vec_zero(dim_);
  if (i == j) return v;
  const Rational sign = i < j ? 1 : -1;
  auto it = brackets_.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
  if (it == brackets_.end()) return v;
  for (const auto& [k, c] : it->second) v[static_cast<std::size_t>(k)] = sign * c;
  return v;
}

Element LieAlgebra::basis_element(int i) const {
  Vec v = vec_zero(dim_);
  v[static_cast<std::size_t>(i)] = 1;
  return Element{std::move(v)};
}

Element bracket(const LieAlgebra& g, const Element& x, const Element& y) {
  if (x.dim() != g.dim() || y.dim() != g.dim())
    throw std::invalid_argument("element dimension does not match algebra");
  Vec r = vec_zero(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    const Rational& xi = x.coords[static_cast<std::size_t>(i)];
    if (is_zero(xi)) continue;
    for (int j = 0; j < g.dim(); ++j) {
      const Rational& yj = y.coords[static_cast<std::size_t>(j)];
      if (is_zero(yj) || i == j) continue;
      Vec bij = g.basis_bracket(i, j);
      Rational f = xi * yj;
      for (int k = 0; k < g.dim(); ++k) r[static_cast<std::size_t>(k)] += f * bij[static_cast<std::size_t>(k)];
    }
  }
  return Element{std::move(r)};
}

Matrix ad_matrix(const LieAlgebra& g, const Element& x) {
  Matrix m(g.dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j)
    m.set_col(j, bracket(g, x, g.basis_element(j)).coords);
  return m;
}

ValidationReport validate_algebra(const LieAlgebra& g) {
  ValidationReport report;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      for (int k = j + 1; k < g.dim(); ++k) {
        Element ei = g.basis_element(i), ej = g.basis_element(j), ek = g.basis_element(k);
        Element sum = elem_add(elem_add(bracket(g, bracket(g, ei, ej), ek),
                                        bracket(g, bracket(g, ej, ek), ei)),
                               bracket(g, bracket(g, ek, ei), ej));
        if (!sum.is_zero())
          report.failures.push_back("jacobi identity fails on basis triple (" +
                                    g.basis_names()[static_cast<std::size_t>(i)] + ", " +
                                    g.basis_names()[static_cast<std::size_t>(j)] + ", " +
                                    g.basis_names()[static_cast<std::size_t>(k)] + ")");
      }
  return report;
}

Subspace derived_subalgebra(const LieAlgebra& g, const Subspace& s) {
  std::vector<Vec> products;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      Element b = bracket(g, Element{s.basis_row(i)}, Element{s.basis_row(j)});
      if (!s.contains(b.coords))
        throw std::invalid_argument("subspace is not closed under the bracket");
      products.push_back(std::move(b.coords));
    }
  return Subspace::span(g.dim(), products);
}

Matrix killing_form(const LieAlgebra& g) {
  std::vector<Matrix> ads;
  ads.reserve(static_cast<std::size_t>(g.dim()));
  for (int i = 0; i < g.dim(); ++i) ads.push_back(ad_matrix(g, g.basis_element(i)));
  Matrix kappa(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) {
      Rational tr = 0;
      for (int r = 0; r < g.dim(); ++r) {
        // (ad e_i * ad e_j)_{rr}
        for (int c = 0; c < g.dim(); ++c) tr += ads[static_cast<std::size_t>(i)].at(r, c) * ads[static_cast<std::size_t>(j)].at(c, r);
      }
      kappa.at(i, j) = tr;
      kappa.at(j, i) = tr;
    }
  return kappa;
}

bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s) {
  Subspace term = s;
  for (int iter = 0; iter <= s.dim() + 1; ++iter) {
    if (term.dim() == 0) return true;
    std::vector<Vec> products;
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < term.dim(); ++j)
        products.push_back(bracket(g, Element{s.basis_row(i)}, Element{term.basis_row(j)}).coords);
    Subspace next = Subspace::span(g.dim(), products);
    if (!term.contains(next)) return false;  // not even a descending series
    if (next.dim() == term.dim()) return false;
    term = std::move(next);
  }
  return term.dim() == 0;
}

}  // namespace uniaff
