#ifndef UNIAFF_POLYNOMIAL_HPP
#define UNIAFF_POLYNOMIAL_HPP

#include <string>

#include "uniaff/matrix.hpp"

namespace uniaff {

/// Univariate polynomial over Q, coefficients in ascending degree order,
/// trailing zeros stripped. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Vec& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Matrix eval(const Matrix& a) const;

  /// Human-readable form in the variable t, e.g. "t^2 - 3t + 2".
  std::string str() const;

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  Vec c_;
};

/// Remainder of a by b under polynomial division. b must be nonzero.
Polynomial poly_rem(const Polynomial& a, const Polynomial& b);

/// Monic gcd via the Euclidean algorithm.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Monic polynomial of least degree annihilating a.
Polynomial minimal_polynomial(const Matrix& a);

/// True iff gcd(p, p') is constant. Throws on the zero polynomial.
bool is_squarefree(const Polynomial& p);

}  // namespace uniaff

#endif
