#ifndef UNIAFF_LEVI_HPP
#define UNIAFF_LEVI_HPP

#include "uniaff/lie_algebra.hpp"

namespace uniaff {

/// Designated decomposition g = l (+) n into a reductive part and the
/// nilradical. Supplied as input, never computed; validate_levi makes
/// wrong inputs fail loudly.
struct LeviData {
  Subspace levi;
  Subspace nilradical;
};

/// Center z(s) = {x in s : [x, s] = 0}, as a subspace of g.
Subspace center_of(const LieAlgebra& g, const Subspace& s);

/// The abstract Lie algebra a subalgebra carries in its own RREF basis.
/// Throws when s is not closed under the bracket.
LieAlgebra subalgebra_structure(const LieAlgebra& g, const Subspace& s);

/// Checks every LeviData invariant, in order: vector-space direct sum,
/// levi a subalgebra, nilradical an ideal, nilradical nilpotent,
/// l = z(l) (+) [l,l], nondegenerate Killing form of [l,l], and
/// semisimple action of z(l) on g. Stops at the first failure.
ValidationReport validate_levi(const LieAlgebra& g, const LeviData& ld);

/// Unique splitting x = x_l + x_n along g = l (+) n.
struct Decomposition {
  Element levi_part;
  Element nil_part;
};
Decomposition decompose(const LieAlgebra& g, const LeviData& ld, const Element& x);

/// True iff ad(x) is nilpotent and the z(l)-component of the Levi part
/// of x vanishes — exactly when exp(t x) is a unipotent one-parameter
/// subgroup of the group presented by (g, l, n).
bool is_nilpotent_element(const LieAlgebra& g, const LeviData& ld, const Element& x);

}  // namespace uniaff

#endif
