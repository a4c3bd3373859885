#include "generators.hpp"

namespace uniaff::testsupport {

Rational random_rational(Rng& rng, int max_abs_num, int max_den) {
  Rational q(rng.uniform(-max_abs_num, max_abs_num), rng.uniform(1, max_den));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(Rng& rng, int max_abs_num, int max_den) {
  for (;;) {
    Rational q = random_rational(rng, max_abs_num, max_den);
    if (!is_zero(q)) return q;
  }
}

Vec random_vec(Rng& rng, int n) {
  Vec v(static_cast<std::size_t>(n));
  for (auto& c : v) c = random_rational(rng);
  return v;
}

Matrix random_matrix(Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng);
  return m;
}

Matrix random_nilpotent_matrix(Rng& rng, int n) {
  Matrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(0.7)) t.at(i, j) = random_rational(rng);
  Matrix p = random_invertible_matrix(rng, n);
  return p * t * inverse(p);
}

Matrix random_invertible_matrix(Rng& rng, int n) {
  Matrix p = Matrix::identity(n);
  const int ops = 2 * n + 2;
  for (int k = 0; k < ops; ++k) {
    int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
    if (i == j) continue;
    // row_i += c * row_j keeps the determinant at +-1
    Rational c(rng.uniform(-2, 2));
    for (int col = 0; col < n; ++col) p.at(i, col) += c * p.at(j, col);
    if (rng.chance(0.3))
      for (int col = 0; col < n; ++col) swap(p.at(i, col), p.at(j, col));
  }
  return p;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = a.rows();
  if (n == 0) return a;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[static_cast<std::size_t>(n - 1)] >= n)
    throw std::invalid_argument("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Element matrix_coords(const std::vector<Matrix>& basis, const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  Matrix sys(rows * cols, static_cast<int>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) sys.at(i * cols + j, static_cast<int>(b)) = basis[b].at(i, j);
  Vec flat(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) flat[static_cast<std::size_t>(i * cols + j)] = m.at(i, j);
  auto coords = solve(sys, flat);
  if (!coords) throw std::invalid_argument("matrix does not lie in the span of the basis");
  return Element{*coords};
}

LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis,
                                 std::vector<std::string> names) {
  const int dim = static_cast<int>(basis.size());
  std::map<std::pair<int, int>, SparseVec> table;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Matrix comm = basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)] -
                    basis[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(i)];
      Element c = matrix_coords(basis, comm);
      SparseVec terms;
      for (int k = 0; k < dim; ++k)
        if (!is_zero(c.coords[static_cast<std::size_t>(k)]))
          terms.emplace_back(k, c.coords[static_cast<std::size_t>(k)]);
      if (!terms.empty()) table[{i, j}] = std::move(terms);
    }
  return LieAlgebra(dim, std::move(names), std::move(table));
}

LieAlgebra sl2_algebra() {
  std::map<std::pair<int, int>, SparseVec> table;
  table[{0, 1}] = {{0, Rational(-2)}};  // [e,h] = -2e
  table[{0, 2}] = {{1, Rational(1)}};   // [e,f] = h
  table[{1, 2}] = {{2, Rational(-2)}};  // [h,f] = -2f
  return LieAlgebra(3, {"e", "h", "f"}, std::move(table));
}

LieAlgebra heisenberg3_algebra() {
  std::map<std::pair<int, int>, SparseVec> table;
  table[{0, 1}] = {{2, Rational(1)}};
  return LieAlgebra(3, {"p", "q", "z"}, std::move(table));
}

namespace {

Subspace coordinate_span(int dim, int lo, int hi) {  // [lo, hi)
  std::vector<Vec> rows;
  for (int k = lo; k < hi; ++k) {
    Vec v = vec_zero(dim);
    v[static_cast<std::size_t>(k)] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace::span(dim, rows);
}

LieAlgebra sl2_module_algebra(bool with_center) {
  // sl2 + V1, optionally with [u0, u1] = z central
  const int dim = with_center ? 6 : 5;
  std::map<std::pair<int, int>, SparseVec> table;
  table[{0, 1}] = {{0, Rational(-2)}};
  table[{0, 2}] = {{1, Rational(1)}};
  table[{1, 2}] = {{2, Rational(-2)}};
  table[{0, 4}] = {{3, Rational(1)}};   // [e,u1] = u0
  table[{1, 3}] = {{3, Rational(1)}};   // [h,u0] = u0
  table[{1, 4}] = {{4, Rational(-1)}};  // [h,u1] = -u1
  table[{2, 3}] = {{4, Rational(1)}};   // [f,u0] = u1
  std::vector<std::string> names = {"e", "h", "f", "u0", "u1"};
  if (with_center) {
    table[{3, 4}] = {{5, Rational(1)}};  // [u0,u1] = z
    names.push_back("z");
  }
  return LieAlgebra(dim, std::move(names), std::move(table));
}

}  // namespace

Instance sl2_instance(const Vec& element_coords) {
  LieAlgebra g = sl2_algebra();
  LeviData ld{Subspace::full(3), Subspace::zero(3)};
  return Instance{"sl2", std::move(g), std::move(ld), Element{element_coords}};
}

Instance sl2v1_instance(const Vec& element_coords) {
  LieAlgebra g = sl2_module_algebra(false);
  LeviData ld{coordinate_span(5, 0, 3), coordinate_span(5, 3, 5)};
  return Instance{"sl2v1", std::move(g), std::move(ld), Element{element_coords}};
}

MatrixAlgebra sl_matrix_algebra(int n) {
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix m(n, n);
      m.at(i, j) = 1;
      basis.push_back(std::move(m));
      names.push_back("E" + std::to_string(i) + std::to_string(j));
    }
  for (int i = 0; i + 1 < n; ++i) {
    Matrix m(n, n);
    m.at(i, i) = 1;
    m.at(i + 1, i + 1) = -1;
    basis.push_back(std::move(m));
    names.push_back("H" + std::to_string(i));
  }
  LieAlgebra g = algebra_from_matrices(basis, std::move(names));
  return MatrixAlgebra{std::move(basis), std::move(g)};
}

Element random_sl_nilpotent(Rng& rng, const MatrixAlgebra& sl) {
  const int n = sl.basis.front().rows();
  for (;;) {
    Matrix m = random_nilpotent_matrix(rng, n);
    if (!m.is_zero()) return matrix_coords(sl.basis, m);
  }
}

namespace {

LieAlgebra filiform_algebra(int dim) {
  // [x1, xk] = x_{k+1} for 2 <= k < dim
  std::map<std::pair<int, int>, SparseVec> table;
  std::vector<std::string> names;
  for (int k = 0; k < dim; ++k) names.push_back("x" + std::to_string(k + 1));
  for (int k = 1; k + 1 < dim; ++k) table[{0, k}] = {{k + 1, Rational(1)}};
  return LieAlgebra(dim, std::move(names), std::move(table));
}

LieAlgebra abelian_algebra(int dim) {
  std::vector<std::string> names;
  for (int k = 0; k < dim; ++k) names.push_back("a" + std::to_string(k));
  return LieAlgebra(dim, std::move(names), {});
}

LieAlgebra heisenberg5_algebra() {
  std::map<std::pair<int, int>, SparseVec> table;
  table[{0, 1}] = {{4, Rational(1)}};
  table[{2, 3}] = {{4, Rational(1)}};
  return LieAlgebra(5, {"p1", "q1", "p2", "q2", "z"}, std::move(table));
}

/// Graded class-<=2 algebra: [V1, V1] -> V2 random antisymmetric, V2
/// central. The Jacobi identity is automatic.
LieAlgebra random_class2_graded(Rng& rng, int v1_dim, int v2_dim, int name_offset = 0) {
  const int dim = v1_dim + v2_dim;
  std::map<std::pair<int, int>, SparseVec> table;
  std::vector<std::string> names;
  for (int k = 0; k < v1_dim; ++k) names.push_back("u" + std::to_string(k + name_offset));
  for (int k = 0; k < v2_dim; ++k) names.push_back("w" + std::to_string(k + name_offset));
  for (int i = 0; i < v1_dim; ++i)
    for (int j = i + 1; j < v1_dim; ++j) {
      SparseVec terms;
      for (int k = 0; k < v2_dim; ++k)
        if (rng.chance(0.6)) {
          Rational c = random_rational(rng, 3, 2);
          if (!is_zero(c)) terms.emplace_back(v1_dim + k, c);
        }
      if (!terms.empty()) table[{i, j}] = std::move(terms);
    }
  return LieAlgebra(dim, std::move(names), std::move(table));
}

Element random_nonzero_element(Rng& rng, int dim) {
  for (;;) {
    Vec v = random_vec(rng, dim);
    if (!vec_is_zero(v)) return Element{std::move(v)};
  }
}

Instance with_random_basis_change(Rng& rng, Instance inst) {
  Matrix p = random_invertible_matrix(rng, inst.g.dim());
  return change_basis(inst, p);
}

}  // namespace

Instance random_unipotent_instance(Rng& rng, int max_dim) {
  LieAlgebra g = abelian_algebra(1);
  switch (rng.uniform(0, 5)) {
    case 0: g = abelian_algebra(rng.uniform(1, std::min(4, max_dim))); break;
    case 1: g = heisenberg3_algebra(); break;
    case 2:
      if (max_dim >= 5) g = heisenberg5_algebra();
      else g = heisenberg3_algebra();
      break;
    case 3: g = filiform_algebra(rng.uniform(3, std::min(6, max_dim))); break;
    case 4: {
      int v1 = rng.uniform(2, 3);
      int v2 = rng.uniform(1, std::min(3, max_dim - v1));
      g = random_class2_graded(rng, v1, v2);
      break;
    }
    default: g = filiform_algebra(4); break;
  }
  const int dim = g.dim();
  Instance inst{"random_unipotent", std::move(g),
                LeviData{Subspace::zero(dim), Subspace::full(dim)},
                random_nonzero_element(rng, dim)};
  return with_random_basis_change(rng, std::move(inst));
}

Instance random_class2_instance(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: {
      // no Levi part, graded class <= 2
      int v1 = rng.uniform(2, 3), v2 = rng.uniform(1, 3);
      LieAlgebra g = random_class2_graded(rng, v1, v2);
      const int dim = g.dim();
      Instance inst{"class2_unipotent", std::move(g),
                    LeviData{Subspace::zero(dim), Subspace::full(dim)},
                    random_nonzero_element(rng, dim)};
      return with_random_basis_change(rng, std::move(inst));
    }
    case 1: {
      // torus acting with weight 1 on V1 and weight 2 on V2
      int v1 = rng.uniform(2, 3), v2 = rng.uniform(1, 2);
      LieAlgebra graded = random_class2_graded(rng, v1, v2);
      const int dim = graded.dim() + 1;
      std::map<std::pair<int, int>, SparseVec> table;
      for (const auto& [pair, terms] : graded.brackets()) {
        SparseVec shifted;
        for (const auto& [k, c] : terms) shifted.emplace_back(k + 1, c);
        table[{pair.first + 1, pair.second + 1}] = std::move(shifted);
      }
      for (int k = 0; k < v1; ++k) table[{0, 1 + k}] = {{1 + k, Rational(1)}};
      for (int k = 0; k < v2; ++k) table[{0, 1 + v1 + k}] = {{1 + v1 + k, Rational(2)}};
      std::vector<std::string> names = {"t"};
      for (const auto& n : graded.basis_names()) names.push_back(n);
      LieAlgebra g(dim, std::move(names), std::move(table));
      // element must avoid the torus direction to stay unipotent
      Vec coords = random_vec(rng, dim);
      coords[0] = 0;
      if (vec_is_zero(coords)) coords[1] = 1;
      Instance inst{"class2_torus", std::move(g),
                    LeviData{coordinate_span(dim, 0, 1), coordinate_span(dim, 1, dim)},
                    Element{std::move(coords)}};
      return with_random_basis_change(rng, std::move(inst));
    }
    case 2: {
      // sl2 + V1, abelian nilradical
      MatrixAlgebra sl = sl_matrix_algebra(2);
      Element s = random_sl_nilpotent(rng, sl);
      Vec coords = vec_zero(5);
      // sl2 coordinates in the (e,h,f) basis of sl2_module_algebra
      // from the (E01,E10,H0) basis of sl_matrix_algebra(2)
      coords[0] = s.coords[0];
      coords[2] = s.coords[1];
      coords[1] = s.coords[2];
      coords[3] = random_rational(rng);
      coords[4] = random_rational(rng);
      Instance inst = sl2v1_instance(coords);
      inst.name = "class2_sl2v1";
      return with_random_basis_change(rng, std::move(inst));
    }
    default: {
      // sl2 + Heisenberg: class exactly 2 with a nontrivial Levi part
      LieAlgebra g = sl2_module_algebra(true);
      MatrixAlgebra sl = sl_matrix_algebra(2);
      Element s = random_sl_nilpotent(rng, sl);
      Vec coords = vec_zero(6);
      coords[0] = s.coords[0];
      coords[2] = s.coords[1];
      coords[1] = s.coords[2];
      for (int k = 3; k < 6; ++k) coords[static_cast<std::size_t>(k)] = random_rational(rng);
      Instance inst{"class2_sl2heis3", std::move(g),
                    LeviData{coordinate_span(6, 0, 3), coordinate_span(6, 3, 6)},
                    Element{std::move(coords)}};
      return with_random_basis_change(rng, std::move(inst));
    }
  }
}

Instance random_instance(Rng& rng) {
  if (rng.chance(0.35)) return random_unipotent_instance(rng, 6);
  if (rng.chance(0.25)) {
    MatrixAlgebra sl = sl_matrix_algebra(2);
    Element s = random_sl_nilpotent(rng, sl);
    Vec coords = vec_zero(5);
    coords[0] = s.coords[0];
    coords[2] = s.coords[1];
    coords[1] = s.coords[2];
    coords[3] = random_rational(rng);
    coords[4] = random_rational(rng);
    Instance inst = sl2v1_instance(coords);
    return with_random_basis_change(rng, std::move(inst));
  }
  return random_class2_instance(rng);
}

Instance change_basis(const Instance& inst, const Matrix& new_basis_cols) {
  const int dim = inst.g.dim();
  Matrix p_inv = inverse(new_basis_cols);
  std::map<std::pair<int, int>, SparseVec> table;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Element bi{new_basis_cols.col(i)}, bj{new_basis_cols.col(j)};
      Vec in_new = p_inv.apply(bracket(inst.g, bi, bj).coords);
      SparseVec terms;
      for (int k = 0; k < dim; ++k)
        if (!is_zero(in_new[static_cast<std::size_t>(k)]))
          terms.emplace_back(k, in_new[static_cast<std::size_t>(k)]);
      if (!terms.empty()) table[{i, j}] = std::move(terms);
    }
  LieAlgebra g(dim, inst.g.basis_names(), std::move(table));

  auto transport = [&](const Subspace& s) {
    std::vector<Vec> rows;
    for (int i = 0; i < s.dim(); ++i) rows.push_back(p_inv.apply(s.basis_row(i)));
    return Subspace::span(dim, rows);
  };
  LeviData ld{transport(inst.ld.levi), transport(inst.ld.nilradical)};
  Element x{p_inv.apply(inst.x.coords)};
  return Instance{inst.name + "_rebased", std::move(g), std::move(ld), std::move(x)};
}

Element random_nilradical_element(Rng& rng, const Instance& inst) {
  Vec v = vec_zero(inst.g.dim());
  for (int i = 0; i < inst.ld.nilradical.dim(); ++i) {
    Rational c = random_rational(rng);
    if (is_zero(c)) continue;
    Vec row = inst.ld.nilradical.basis_row(i);
    for (int k = 0; k < inst.g.dim(); ++k) v[static_cast<std::size_t>(k)] += c * row[static_cast<std::size_t>(k)];
  }
  return Element{std::move(v)};
}

}  // namespace uniaff::testsupport
