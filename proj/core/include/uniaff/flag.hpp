#ifndef UNIAFF_FLAG_HPP
#define UNIAFF_FLAG_HPP

#include "uniaff/levi.hpp"

namespace uniaff {

/// One level of the derived series of the nilradical: the subalgebra
/// n^(k) together with ordered coset representatives for the quotient
/// V_k = n^(k) / n^(k+1). Representatives are the rows of the RREF
/// basis of n^(k) at the non-pivot coordinates of n^(k+1) expressed in
/// that basis, so the choice is deterministic.
struct FlagLevel {
  int index = 0;
  Subspace sub;       // n^(k)
  Subspace next;      // n^(k+1)
  std::vector<Element> quotient_basis;

  int quotient_dim() const { return static_cast<int>(quotient_basis.size()); }
};

/// The chain n > [n,n] > ... > {0}, ending with the zero level. Throws
/// when the chain fails to decrease strictly to zero.
std::vector<FlagLevel> derived_series(const LieAlgebra& g, const Subspace& n);

/// Coordinates of x mod n^(k+1) in the representative basis. Throws
/// when x does not lie in n^(k).
Vec project(const LieAlgebra& g, const FlagLevel& level, const Element& x);

/// The representative combination with the given quotient coordinates.
Element lift(const LieAlgebra& g, const FlagLevel& level, const Vec& quotient_coords);

/// Matrix of ad(x_l) acting on V_k in the representative basis.
Matrix induced_action(const LieAlgebra& g, const FlagLevel& level, const Element& levi_part);

}  // namespace uniaff

#endif
