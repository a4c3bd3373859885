#ifndef UNIAFF_RATIONAL_HPP
#define UNIAFF_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace uniaff {

/// Exact rational scalar. Always canonical: positive denominator,
/// gcd(|num|, den) = 1, zero is 0/1. GMP maintains this through
/// every arithmetic operation.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

/// Parses "p" or "p/q" with integer p and positive integer q.
/// The input need not be reduced; the result always is.
Rational rat_from_string(const std::string& s);

/// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// -- small vector helpers used throughout ------------------------------

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Rational vec_dot(const Vec& a, const Vec& b);
Vec vec_zero(int n);

}  // namespace uniaff

#endif
