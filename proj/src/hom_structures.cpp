#include "homcat/hom_structures.hpp"

#include <array>
#include <string>

#include "homcat/error.hpp"

namespace homcat {
namespace {

void require_shape(const LinMap& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionMismatch(std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                            "x" + std::to_string(cols));
}

void require_field(const LinMap& a, const LinMap& b, const char* what) {
  if (!(a.field() == b.field())) throw FieldMismatch(what);
}

Field cube_field(const Cube& c) {
  for (const auto& plane : c)
    for (const auto& row : plane)
      if (!row.empty()) return row.front().field();
  return Field();
}

std::size_t cube_dim(const Cube& c) {
  std::size_t n = c.size();
  for (const auto& plane : c) {
    if (plane.size() != n) throw DimensionMismatch("structure cube is not n x n x n");
    for (const auto& row : plane)
      if (row.size() != n) throw DimensionMismatch("structure cube is not n x n x n");
  }
  return n;
}

}  // namespace

LinMap mul_from_cube(const Cube& m) {
  std::size_t n = cube_dim(m);
  LinMap out(cube_field(m), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(k, flatten(i, j, n)) = m[i][j][k];
  return out;
}

LinMap comul_from_cube(const Cube& d) {
  std::size_t n = cube_dim(d);
  LinMap out(cube_field(d), n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(flatten(i, j, n), k) = d[k][i][j];
  return out;
}

Cube cube_from_mul(const LinMap& mul) {
  std::size_t n = mul.rows();
  require_shape(mul, n, n * n, "multiplication");
  Cube c(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = mul(k, flatten(i, j, n));
  return c;
}

Cube cube_from_comul(const LinMap& comul) {
  std::size_t n = comul.cols();
  require_shape(comul, n * n, n, "comultiplication");
  Cube c(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[k][i][j] = comul(flatten(i, j, n), k);
  return c;
}

void HomAlgebra::validate() const {
  require_shape(mul, dim, dim * dim, "multiplication");
  require_shape(alpha, dim, dim, "alpha");
  require_field(mul, alpha, "multiplication and alpha over different fields");
}

void HomCoalgebra::validate() const {
  require_shape(comul, dim * dim, dim, "comultiplication");
  require_shape(psi, dim, dim, "psi");
  require_field(comul, psi, "comultiplication and psi over different fields");
}

void HomBialgebra::validate() const {
  algebra().validate();
  coalgebra().validate();
  require_field(alpha, psi, "alpha and psi over different fields");
}

CheckReport check_hom_algebra(const HomAlgebra& a, std::size_t cap) {
  a.validate();
  CheckReport r(cap);
  const std::size_t n = a.dim;
  std::array<std::size_t, 2> d2{n, n};
  std::array<std::size_t, 3> d3{n, n, n};
  r.expect_equal("eq1", compose(a.alpha, a.mul), compose(a.mul, kron(a.alpha, a.alpha)), d2);
  r.expect_equal("eq2", compose(a.mul, kron(a.alpha, a.mul)),
                 compose(a.mul, kron(a.mul, a.alpha)), d3);
  return r;
}

CheckReport check_hom_coalgebra(const HomCoalgebra& c, std::size_t cap) {
  c.validate();
  CheckReport r(cap);
  std::array<std::size_t, 1> d1{c.dim};
  r.expect_equal("eq3", compose(kron(c.psi, c.psi), c.comul), compose(c.comul, c.psi), d1);
  r.expect_equal("eq4", compose(kron(c.comul, c.psi), c.comul),
                 compose(kron(c.psi, c.comul), c.comul), d1);
  return r;
}

namespace {

// The hom-coassociativity of a bialgebra, summed term by term from the cube
// rather than through matrix composition.
void sweedler_coassociativity(const HomBialgebra& h, CheckReport& r) {
  const std::size_t n = h.dim;
  const Field f = h.field();
  const auto d = [&](std::size_t k, std::size_t i, std::size_t j) -> const FieldElem& {
    return h.comul(flatten(i, j, n), k);
  };
  LinMap lhs(f, n * n * n, n), rhs(f, n * n * n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const FieldElem& c = d(b, p, q);
        if (c.is_zero()) continue;
        // b(1)(1) (x) b(1)(2) (x) psi(b(2))
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            const FieldElem& c1 = d(p, x, y);
            if (c1.is_zero()) continue;
            for (std::size_t z = 0; z < n; ++z)
              if (!h.psi(z, q).is_zero())
                lhs(flatten(flatten(x, y, n), z, n), b).add_product(c * c1, h.psi(z, q));
          }
        // psi(b(1)) (x) b(2)(1) (x) b(2)(2)
        for (std::size_t x = 0; x < n; ++x) {
          if (h.psi(x, p).is_zero()) continue;
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
              if (!d(q, y, z).is_zero())
                rhs(flatten(flatten(x, y, n), z, n), b).add_product(c * h.psi(x, p), d(q, y, z));
        }
      }
  std::array<std::size_t, 1> d1{n};
  r.expect_equal("eq5", lhs, rhs, d1);
}

}  // namespace

CheckReport check_hom_bialgebra(const HomBialgebra& h, std::size_t cap) {
  h.validate();
  CheckReport r(cap);
  r.absorb(check_hom_algebra(h.algebra(), cap));
  r.absorb(check_hom_coalgebra(h.coalgebra(), cap));
  const std::size_t n = h.dim;
  const Field f = h.field();
  std::array<std::size_t, 1> d1{n};
  std::array<std::size_t, 2> d2{n, n};
  r.expect_equal("alpha_psi_commute", compose(h.alpha, h.psi), compose(h.psi, h.alpha), d1);
  sweedler_coassociativity(h, r);
  const std::array<std::size_t, 4> dims4{n, n, n, n};
  const std::array<std::size_t, 4> middle_swap{0, 2, 1, 3};
  const auto tau_mid = tensor_permutation(f, dims4, middle_swap);
  r.expect_equal("eq6", compose(h.comul, h.mul),
                 compose({kron(h.mul, h.mul), tau_mid, kron(h.comul, h.comul)}), d2);
  r.expect_equal("eq7", compose(h.comul, h.alpha), compose(kron(h.alpha, h.alpha), h.comul), d1);
  r.expect_equal("eq7111", compose(h.comul, h.psi), compose(kron(h.psi, h.psi), h.comul), d1);
  r.expect_equal("eq7112", compose(h.psi, h.mul), compose(h.mul, kron(h.psi, h.psi)), d2);
  return r;
}

CheckReport check_structure_morphism(const LinMap& f, const HomAlgebra& src,
                                     const HomAlgebra& dst) {
  src.validate();
  dst.validate();
  require_shape(f, dst.dim, src.dim, "morphism");
  CheckReport r;
  std::array<std::size_t, 1> d1{src.dim};
  std::array<std::size_t, 2> d2{src.dim, src.dim};
  r.expect_equal("morph.alpha", compose(dst.alpha, f), compose(f, src.alpha), d1);
  r.expect_equal("morph.mul", compose(f, src.mul), compose(dst.mul, kron(f, f)), d2);
  return r;
}

CheckReport check_structure_morphism(const LinMap& g, const HomCoalgebra& src,
                                     const HomCoalgebra& dst) {
  src.validate();
  dst.validate();
  require_shape(g, dst.dim, src.dim, "morphism");
  CheckReport r;
  std::array<std::size_t, 1> d1{src.dim};
  r.expect_equal("morph.psi", compose(dst.psi, g), compose(g, src.psi), d1);
  r.expect_equal("morph.comul", compose(kron(g, g), src.comul), compose(dst.comul, g), d1);
  return r;
}

CheckReport check_structure_morphism(const LinMap& f, const HomBialgebra& src,
                                     const HomBialgebra& dst, MorphismKind kind) {
  return kind == MorphismKind::Algebra
             ? check_structure_morphism(f, src.algebra(), dst.algebra())
             : check_structure_morphism(f, src.coalgebra(), dst.coalgebra());
}

HomAlgebra yau_twist_algebra(const LinMap& mul, const LinMap& alpha) {
  const std::size_t n = alpha.rows();
  HomAlgebra in{n, mul, alpha};
  in.validate();
  const auto id = LinMap::identity(alpha.field(), n);
  if (!(compose(mul, kron(mul, id)) == compose(mul, kron(id, mul))))
    throw PreconditionError("multiplication is not associative", {"not-associative"});
  if (!(compose(alpha, mul) == compose(mul, kron(alpha, alpha))))
    throw PreconditionError("alpha is not an algebra endomorphism", {"not-endomorphism"});
  return {n, compose(alpha, mul), alpha};
}

HomBialgebra yau_twist_bialgebra(const LinMap& mul, const LinMap& comul, const LinMap& alpha) {
  const std::size_t n = alpha.rows();
  HomBialgebra in{n, mul, comul, alpha, alpha};
  in.validate();
  const auto id = LinMap::identity(alpha.field(), n);
  std::vector<std::string> failed;
  if (!(compose(mul, kron(mul, id)) == compose(mul, kron(id, mul))))
    failed.push_back("not-associative");
  if (!(compose(kron(comul, id), comul) == compose(kron(id, comul), comul)))
    failed.push_back("not-coassociative");
  const std::array<std::size_t, 4> dims4{n, n, n, n};
  const std::array<std::size_t, 4> middle_swap{0, 2, 1, 3};
  if (!(compose(comul, mul) ==
        compose({kron(mul, mul), tensor_permutation(alpha.field(), dims4, middle_swap),
                 kron(comul, comul)})))
    failed.push_back("not-multiplicative");
  if (!(compose(alpha, mul) == compose(mul, kron(alpha, alpha))) ||
      !(compose(comul, alpha) == compose(kron(alpha, alpha), comul)))
    failed.push_back("not-endomorphism");
  if (!failed.empty()) throw PreconditionError("Yau twist preconditions fail", failed);
  return {n, compose(alpha, mul), compose(comul, alpha), alpha, alpha};
}

HomAlgebra tensor_hom_algebra(const HomAlgebra& a, const HomAlgebra& b) {
  a.validate();
  b.validate();
  if (!(a.field() == b.field())) throw FieldMismatch("tensor of algebras over different fields");
  const std::array<std::size_t, 4> dims{a.dim, b.dim, a.dim, b.dim};
  const std::array<std::size_t, 4> order{0, 2, 1, 3};
  auto mul = compose(kron(a.mul, b.mul), tensor_permutation(a.field(), dims, order));
  return {a.dim * b.dim, mul, kron(a.alpha, b.alpha)};
}

CheckReport check_hom_semigroup(const HomSemigroup& s, std::size_t cap) {
  const std::size_t n = s.n;
  if (s.table.size() != n || s.alpha.size() != n)
    throw DimensionMismatch("semigroup table size");
  for (const auto& row : s.table) {
    if (row.size() != n) throw DimensionMismatch("semigroup table size");
    for (auto v : row)
      if (v >= n) throw DimensionMismatch("semigroup table entry out of range");
  }
  for (auto v : s.alpha)
    if (v >= n) throw DimensionMismatch("semigroup alpha entry out of range");

  // Elements are reported as basis vectors of the semigroup algebra over Q.
  const Field q;
  auto basis = [&](std::size_t x) {
    Vec v(n, FieldElem(q, 0));
    v[x] = FieldElem(q, 1);
    return v;
  };
  CheckReport r(cap);
  r.touch("semigroup.hom_assoc");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t lhs = s.table[s.alpha[x]][s.table[y][z]];
        std::size_t rhs = s.table[s.table[x][y]][s.alpha[z]];
        if (lhs != rhs) r.add_violation({"semigroup.hom_assoc", {x, y, z}, basis(lhs), basis(rhs)});
      }
  r.touch("semigroup.multiplicative");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t lhs = s.alpha[s.table[x][y]];
      std::size_t rhs = s.table[s.alpha[x]][s.alpha[y]];
      if (lhs != rhs)
        r.add_violation({"semigroup.multiplicative", {x, y}, basis(lhs), basis(rhs)});
    }
  return r;
}

namespace {

// Column h holds the entries of the operator a -> h a, row (k, a).
LinMap regular_operator_matrix(const HomAlgebra& a, const LinMap& module_slot) {
  const std::size_t n = a.dim;
  LinMap ops(a.field(), n * n, n);
  for (std::size_t h = 0; h < n; ++h) {
    LinMap left = compose(a.mul, kron(LinMap::column(unit_vector(a.field(), n, h)), module_slot));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x) ops(flatten(k, x, n), h) = left(k, x);
  }
  return ops;
}

}  // namespace

Nondegeneracy nondegenerate_via_regular(const HomAlgebra& a) {
  a.validate();
  auto ops = regular_operator_matrix(a, LinMap::identity(a.field(), a.dim));
  return rank(ops) == a.dim ? Nondegeneracy::Nondegenerate : Nondegeneracy::Unknown;
}

Nondegeneracy strongly_nondegenerate_via_regular(const HomAlgebra& a) {
  a.validate();
  auto ops = regular_operator_matrix(a, a.alpha);
  return rank(ops) == a.dim ? Nondegeneracy::Nondegenerate : Nondegeneracy::Unknown;
}

}  // namespace homcat
