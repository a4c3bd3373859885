#include "uniaff/matrix.hpp"

namespace uniaff {

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (e_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match matrix shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[static_cast<std::size_t>(i)]);
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[static_cast<std::size_t>(j)];
}

void Matrix::set_col(int j, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!uniaff::is_zero(x)) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  Vec r(static_cast<std::size_t>(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.mat = m;
  Matrix& a = res.mat;
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int sel = -1;
    for (int i = pivot_row; i < a.rows(); ++i)
      if (!is_zero(a.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < a.cols(); ++j) swap(a.at(sel, j), a.at(pivot_row, j));
    Rational inv = 1 / a.at(pivot_row, col);
    for (int j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || is_zero(a.at(i, col))) continue;
      Rational f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(pivot_row, j);
    }
    res.pivots.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("right-hand side length does not match row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  RrefResult r = rref(aug);
  for (int p : r.pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent
  Vec x = vec_zero(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[static_cast<std::size_t>(r.pivots[i])] = r.mat.at(static_cast<int>(i), a.cols());
  return x;
}

Matrix exp_nilpotent(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("exp_nilpotent: matrix must be square");
  const int n = a.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix sum = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  Rational factorial = 1;
  for (int i = 1; i <= n; ++i) {
    power = power * a;
    if (power.is_zero()) return sum;
    factorial *= i;
    sum = sum + (1 / factorial) * power;
  }
  // a^n != 0 for an n x n matrix rules out nilpotency
  throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace uniaff
