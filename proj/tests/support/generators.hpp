#ifndef UNIAFF_TEST_GENERATORS_HPP
#define UNIAFF_TEST_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "uniaff/certificate.hpp"
#include "uniaff/engine.hpp"

namespace uniaff::testsupport {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
};

Rational random_rational(Rng& rng, int max_abs_num = 4, int max_den = 3);
Rational random_nonzero_rational(Rng& rng, int max_abs_num = 4, int max_den = 3);
Vec random_vec(Rng& rng, int n);
Matrix random_matrix(Rng& rng, int rows, int cols);

/// Conjugated strictly-upper-triangular matrix: genuinely nilpotent,
/// dense entries. Nonzero unless n < 2.
Matrix random_nilpotent_matrix(Rng& rng, int n);

/// Product of integer elementary operations: invertible with an exact
/// rational inverse of modest height.
Matrix random_invertible_matrix(Rng& rng, int n);

Matrix inverse(const Matrix& a);

/// Structure constants read off from explicit matrices: [b_i, b_j]
/// expanded in the given basis. Throws when the span is not closed.
LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis,
                                 std::vector<std::string> names);
Element matrix_coords(const std::vector<Matrix>& basis, const Matrix& m);

struct Instance {
  std::string name;
  LieAlgebra g;
  LeviData ld;
  Element x;
};

// fixed algebras
LieAlgebra sl2_algebra();
LieAlgebra heisenberg3_algebra();
Instance sl2_instance(const Vec& element_coords);
Instance sl2v1_instance(const Vec& element_coords);

/// sl(n) as structure constants plus its matrix basis, for building
/// random nilpotent elements exactly.
struct MatrixAlgebra {
  std::vector<Matrix> basis;
  LieAlgebra g;
};
MatrixAlgebra sl_matrix_algebra(int n);

/// Random nonzero nilpotent element of sl(n): a conjugate of a random
/// strictly upper-triangular matrix, in structure-constant coordinates.
Element random_sl_nilpotent(Rng& rng, const MatrixAlgebra& sl);

/// Random nilpotent Lie algebra with levi = 0: a named family instance
/// (abelian, Heisenberg, filiform, class-2 graded) pushed through a
/// random change of basis, with a random nonzero element.
Instance random_unipotent_instance(Rng& rng, int max_dim);

/// Random validated instance with nilradical of class <= 2 and
/// dim g <= 6; mixes trivial, torus, and sl2 Levi parts.
Instance random_class2_instance(Rng& rng);

/// Random validated instance (any class), used for certificate
/// round-trip testing.
Instance random_instance(Rng& rng);

/// Transport the whole instance through an invertible change of basis:
/// structure constants, Levi data, and element, consistently.
Instance change_basis(const Instance& inst, const Matrix& new_basis_cols);

/// Random ad-nilpotent element of the nilradical.
Element random_nilradical_element(Rng& rng, const Instance& inst);

}  // namespace uniaff::testsupport

#endif
