#ifndef UNIAFF_MATRIX_HPP
#define UNIAFF_MATRIX_HPP

#include <optional>
#include <vector>

#include "uniaff/rational.hpp"

namespace uniaff {

/// Dense matrix over Q, row-major. Dimensions may be zero.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Matrix(int rows, int cols, std::vector<Rational> entries);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);
  void set_col(int j, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Matrix-vector product.
  Vec apply(const Vec& v) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  Matrix mat;               // the unique reduced row-echelon form
  int rank = 0;             // number of nonzero rows
  std::vector<int> pivots;  // pivot column of each nonzero row, increasing
};

/// Reduced row-echelon form with full normalization (pivots 1, cleared
/// columns). Deterministic: the RREF of a matrix is unique.
RrefResult rref(const Matrix& m);

/// Some solution x of a*x = b, or nullopt when b is outside the column
/// space. Canonical choice: all free variables are set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Exact exp of a nilpotent matrix, summing a^i/i! up to the nilpotency
/// index. Throws when the input is not nilpotent.
Matrix exp_nilpotent(const Matrix& a);

}  // namespace uniaff

#endif
