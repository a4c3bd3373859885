#include "uniaff/flag.hpp"

namespace uniaff {

namespace {

std::vector<Element> quotient_representatives(const LieAlgebra& g, const Subspace& sub,
                                              const Subspace& next) {
  // coordinates of next's basis relative to sub's basis; the non-pivot
  // coordinates index the representatives
  std::vector<Vec> coord_rows;
  for (int i = 0; i < next.dim(); ++i) {
    auto c = sub.coordinates(next.basis_row(i));
    if (!c) throw std::logic_error("derived subalgebra escapes its parent");
    coord_rows.push_back(std::move(*c));
  }
  RrefResult r = rref(Matrix::from_rows(coord_rows, sub.dim()));
  std::vector<bool> is_pivot(static_cast<std::size_t>(sub.dim()), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Element> reps;
  for (int j = 0; j < sub.dim(); ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) reps.push_back(Element{sub.basis_row(j)});
  return reps;
}

}  // namespace

std::vector<FlagLevel> derived_series(const LieAlgebra& g, const Subspace& n) {
  std::vector<FlagLevel> levels;
  Subspace current = n;
  for (int k = 0;; ++k) {
    Subspace next = derived_subalgebra(g, current);
    if (current.dim() > 0 && next.dim() >= current.dim())
      throw std::invalid_argument("derived series does not decrease; subspace is not solvable");
    FlagLevel level;
    level.index = k;
    level.sub = current;
    level.next = next;
    level.quotient_basis = quotient_representatives(g, current, next);
    const bool done = current.dim() == 0;
    levels.push_back(std::move(level));
    if (done) break;
    current = std::move(next);
  }
  return levels;
}

Vec project(const LieAlgebra& g, const FlagLevel& level, const Element& x) {
  if (x.dim() != g.dim()) throw std::invalid_argument("element dimension does not match algebra");
  const int m = level.next.dim(), q = level.quotient_dim();
  Matrix stacked(g.dim(), m + q);
  for (int j = 0; j < m; ++j) stacked.set_col(j, level.next.basis_row(j));
  for (int j = 0; j < q; ++j) stacked.set_col(m + j, level.quotient_basis[static_cast<std::size_t>(j)].coords);
  auto coords = solve(stacked, x.coords);
  if (!coords) throw std::invalid_argument("element does not lie in the level subalgebra");
  Vec v(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) v[static_cast<std::size_t>(j)] = (*coords)[static_cast<std::size_t>(m + j)];
  return v;
}

Element lift(const LieAlgebra& g, const FlagLevel& level, const Vec& quotient_coords) {
  if (static_cast<int>(quotient_coords.size()) != level.quotient_dim())
    throw std::invalid_argument("quotient coordinate length mismatch");
  Vec v = vec_zero(g.dim());
  for (int j = 0; j < level.quotient_dim(); ++j) {
    const Rational& c = quotient_coords[static_cast<std::size_t>(j)];
    if (is_zero(c)) continue;
    const Vec& rep = level.quotient_basis[static_cast<std::size_t>(j)].coords;
    for (int k = 0; k < g.dim(); ++k) v[static_cast<std::size_t>(k)] += c * rep[static_cast<std::size_t>(k)];
  }
  return Element{std::move(v)};
}

Matrix induced_action(const LieAlgebra& g, const FlagLevel& level, const Element& levi_part) {
  const int q = level.quotient_dim();
  Matrix a(q, q);
  for (int j = 0; j < q; ++j)
    a.set_col(j, project(g, level, bracket(g, levi_part, level.quotient_basis[static_cast<std::size_t>(j)])));
  return a;
}

}  // namespace uniaff
