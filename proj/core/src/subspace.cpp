#include "uniaff/subspace.hpp"

namespace uniaff {

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& spanning_rows) {
  for (const auto& v : spanning_rows)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("spanning vector length does not match ambient dimension");
  RrefResult r = rref(Matrix::from_rows(spanning_rows, ambient_dim));
  Matrix basis(r.rank, ambient_dim);
  for (int i = 0; i < r.rank; ++i) basis.set_row(i, r.mat.row(i));
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  // reduce v against the RREF rows; membership iff the residual vanishes
  Vec w = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(basis_.at(i, j))) {
        p = j;
        break;
      }
    const Rational c = w[static_cast<std::size_t>(p)];
    if (is_zero(c)) continue;
    for (int j = p; j < ambient_; ++j) w[static_cast<std::size_t>(j)] -= c * basis_.at(i, j);
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("ambient dimension mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  return solve(basis_.transpose(), v);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis_row(i));
  for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis_row(i));
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  // Zassenhaus: kernel of [A^T | B^T] gives coefficient pairs with
  // A^T x = -B^T y; the common vector is A^T x.
  const int n = a.ambient_dim();
  Matrix stacked(n, a.dim() + b.dim());
  for (int j = 0; j < a.dim(); ++j) stacked.set_col(j, a.basis_row(j));
  for (int j = 0; j < b.dim(); ++j) stacked.set_col(a.dim() + j, b.basis_row(j));
  Subspace ker = kernel(stacked);
  std::vector<Vec> rows;
  for (int i = 0; i < ker.dim(); ++i) {
    Vec coeff = ker.basis_row(i);
    Vec v = vec_zero(n);
    for (int j = 0; j < a.dim(); ++j) {
      const Rational& c = coeff[static_cast<std::size_t>(j)];
      if (is_zero(c)) continue;
      Vec bj = a.basis_row(j);
      for (int t = 0; t < n; ++t) v[static_cast<std::size_t>(t)] += c * bj[static_cast<std::size_t>(t)];
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

Subspace image(const Matrix& a) {
  std::vector<Vec> cols;
  for (int j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
  return Subspace::span(a.rows(), cols);
}

Subspace kernel(const Matrix& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec> rows;
  for (int j = 0; j < a.cols(); ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    Vec v = vec_zero(a.cols());
    v[static_cast<std::size_t>(j)] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[static_cast<std::size_t>(r.pivots[i])] = -r.mat.at(static_cast<int>(i), j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(a.cols(), rows);
}

}  // namespace uniaff
