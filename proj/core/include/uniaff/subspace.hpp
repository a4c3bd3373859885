#ifndef UNIAFF_SUBSPACE_HPP
#define UNIAFF_SUBSPACE_HPP

#include <vector>

#include "uniaff/matrix.hpp"

namespace uniaff {

/// Linear subspace of Q^n, stored as a canonical RREF basis (rows of a
/// matrix). Two equal subspaces have identical representations, so
/// subspace equality is representation equality.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  /// Canonicalizes the spanning rows via RREF, dropping zero rows.
  static Subspace span(int ambient_dim, const std::vector<Vec>& spanning_rows);
  static Subspace zero(int ambient_dim) { return span(ambient_dim, {}); }
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the RREF basis rows, when v lies in the space.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_;
  Matrix basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Column space of a, as a canonical subspace of Q^rows.
Subspace image(const Matrix& a);

/// Null space {x : a*x = 0}, as a canonical subspace of Q^cols.
Subspace kernel(const Matrix& a);

}  // namespace uniaff

#endif
