#include "uniaff/polynomial.hpp"

namespace uniaff {

void Polynomial::trim() {
  while (!c_.empty() && uniaff::is_zero(c_.back())) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  Vec d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::invalid_argument("monic form of zero polynomial");
  Rational inv = 1 / leading();
  Vec m(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) m[k] = inv * c_[k];
  return Polynomial(std::move(m));
}

Matrix Polynomial::eval(const Matrix& a) const {
  if (!a.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  const int n = a.rows();
  Matrix acc(n, n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!uniaff::is_zero(c_[k])) acc = acc + c_[k] * power;
    if (k + 1 < c_.size()) power = power * a;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (uniaff::is_zero(c)) continue;
    const bool first = out.empty();
    std::string sign = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    Rational mag = abs(c);
    std::string term;
    if (k == 0) {
      term = rat_to_string(mag);
    } else {
      std::string var = k == 1 ? "t" : "t^" + std::to_string(k);
      term = (mag == 1) ? var : rat_to_string(mag) + var;
    }
    out += sign + term;
  }
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vec c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Vec c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial poly_rem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Vec r = a.coeffs();
  const int db = b.degree();
  while (static_cast<int>(r.size()) - 1 >= db) {
    if (uniaff::is_zero(r.back())) {
      r.pop_back();
      continue;
    }
    const int dr = static_cast<int>(r.size()) - 1;
    Rational f = r.back() / b.leading();
    for (int k = 0; k <= db; ++k)
      r[static_cast<std::size_t>(dr - db + k)] -= f * b.coeff(k);
    r.pop_back();
  }
  return Polynomial(std::move(r));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("minimal polynomial needs a square matrix");
  const int n = a.rows();
  if (n == 0) return Polynomial(Vec{1});  // empty matrix: min poly 1
  const int nn = n * n;
  // find the least k with a^k dependent on lower powers, flattening
  // matrices to length-n^2 columns
  std::vector<Vec> powers;
  Matrix power = Matrix::identity(n);
  for (int k = 0;; ++k) {
    Vec flat(static_cast<std::size_t>(nn));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i * n + j)] = power.at(i, j);
    Matrix lower(nn, k);
    for (int c = 0; c < k; ++c) lower.set_col(c, powers[static_cast<std::size_t>(c)]);
    if (auto coeffs = solve(lower, flat)) {
      Vec p(static_cast<std::size_t>(k + 1), Rational(0));
      for (int c = 0; c < k; ++c) p[static_cast<std::size_t>(c)] = -(*coeffs)[static_cast<std::size_t>(c)];
      p[static_cast<std::size_t>(k)] = 1;
      return Polynomial(std::move(p));
    }
    powers.push_back(std::move(flat));
    power = power * a;
  }
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree test on zero polynomial");
  if (p.degree() == 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace uniaff
