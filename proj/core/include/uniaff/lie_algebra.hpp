#ifndef UNIAFF_LIE_ALGEBRA_HPP
#define UNIAFF_LIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uniaff/subspace.hpp"

namespace uniaff {

/// Coordinate vector in a fixed Lie algebra basis.
struct Element {
  Vec coords;

  bool is_zero() const { return vec_is_zero(coords); }
  int dim() const { return static_cast<int>(coords.size()); }

  friend bool operator==(const Element& a, const Element& b) { return a.coords == b.coords; }
};

Element elem_add(const Element& a, const Element& b);
Element elem_sub(const Element& a, const Element& b);
Element elem_scale(const Rational& c, const Element& a);

/// Sparse structure-constant vector: [e_i, e_j] = sum c_k e_k.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Only pairs i < j are stored; antisymmetry supplies the rest and
/// [e_i, e_i] = 0. The Jacobi identity is checked by validate_algebra,
/// not by the constructor.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::string> basis_names,
             std::map<std::pair<int, int>, SparseVec> brackets);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::map<std::pair<int, int>, SparseVec>& brackets() const { return brackets_; }

  /// [e_i, e_j] as a coordinate vector, any i, j.
  Vec basis_bracket(int i, int j) const;

  Element basis_element(int i) const;
  Element zero_element() const { return Element{vec_zero(dim_)}; }

 private:
  int dim_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, SparseVec> brackets_;
};

struct ValidationReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string first() const { return failures.empty() ? std::string() : failures.front(); }
};

/// Bilinear antisymmetric extension of the structure constants.
Element bracket(const LieAlgebra& g, const Element& x, const Element& y);

/// Matrix of ad(x): column j is [x, e_j].
Matrix ad_matrix(const LieAlgebra& g, const Element& x);

/// Checks the Jacobi identity on all basis triples; reports every
/// failing triple.
ValidationReport validate_algebra(const LieAlgebra& g);

/// Span of all brackets of basis pairs of s. Throws when s is not
/// closed under the bracket.
Subspace derived_subalgebra(const LieAlgebra& g, const Subspace& s);

/// kappa(e_i, e_j) = trace(ad e_i * ad e_j).
Matrix killing_form(const LieAlgebra& g);

/// Lower central series test: n, [n,n'], [n,[n,n']], ... reaches zero.
bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s);

}  // namespace uniaff

#endif
