#pragma once

#include <cstddef>
#include <vector>

#include "homcat/linmap.hpp"
#include "homcat/report.hpp"

namespace homcat {

// cube[i][j][k]; for products e_i e_j = sum_k cube[i][j][k] e_k,
// for coproducts Delta(e_k) = sum_{i,j} cube[k][i][j] e_i (x) e_j.
using Cube = std::vector<std::vector<Vec>>;

// dim x dim^2 matrix of a product given as m[i][j][k].
LinMap mul_from_cube(const Cube& m);
// dim^2 x dim matrix of a coproduct given as d[k][i][j].
LinMap comul_from_cube(const Cube& d);
Cube cube_from_mul(const LinMap& mul);
Cube cube_from_comul(const LinMap& comul);

// Multiplication mul: A (x) A -> A stored as a dim x dim^2 matrix.
struct HomAlgebra {
  std::size_t dim = 0;
  LinMap mul;
  LinMap alpha;

  Field field() const { return alpha.field(); }
  const FieldElem& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return mul(k, flatten(i, j, dim));
  }
  void validate() const;
};

// Comultiplication comul: C -> C (x) C stored as a dim^2 x dim matrix.
struct HomCoalgebra {
  std::size_t dim = 0;
  LinMap comul;
  LinMap psi;

  Field field() const { return psi.field(); }
  const FieldElem& coeff(std::size_t k, std::size_t i, std::size_t j) const {
    return comul(flatten(i, j, dim), k);
  }
  void validate() const;
};

struct HomBialgebra {
  std::size_t dim = 0;
  LinMap mul;
  LinMap comul;
  LinMap alpha;
  LinMap psi;

  Field field() const { return alpha.field(); }
  HomAlgebra algebra() const { return {dim, mul, alpha}; }
  HomCoalgebra coalgebra() const { return {dim, comul, psi}; }
  void validate() const;
};

struct HomSemigroup {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> alpha;
};

enum class MorphismKind { Algebra, Coalgebra };
enum class Nondegeneracy { Nondegenerate, Unknown };

CheckReport check_hom_algebra(const HomAlgebra& a, std::size_t cap = kDefaultViolationCap);
CheckReport check_hom_coalgebra(const HomCoalgebra& c, std::size_t cap = kDefaultViolationCap);
CheckReport check_hom_bialgebra(const HomBialgebra& h, std::size_t cap = kDefaultViolationCap);

// f : src -> dst. Algebra kind uses (mul, alpha); coalgebra kind uses (comul, psi).
CheckReport check_structure_morphism(const LinMap& f, const HomAlgebra& src,
                                     const HomAlgebra& dst);
CheckReport check_structure_morphism(const LinMap& f, const HomCoalgebra& src,
                                     const HomCoalgebra& dst);
CheckReport check_structure_morphism(const LinMap& f, const HomBialgebra& src,
                                     const HomBialgebra& dst, MorphismKind kind);

// (A, alpha o mul, alpha); throws PreconditionError "not-associative" or
// "not-endomorphism".
HomAlgebra yau_twist_algebra(const LinMap& mul, const LinMap& alpha);
// (alpha o mul, comul o alpha, alpha, alpha) for a classical bialgebra and a
// bialgebra endomorphism alpha; throws PreconditionError otherwise.
HomBialgebra yau_twist_bialgebra(const LinMap& mul, const LinMap& comul, const LinMap& alpha);

HomAlgebra tensor_hom_algebra(const HomAlgebra& a, const HomAlgebra& b);

CheckReport check_hom_semigroup(const HomSemigroup& s, std::size_t cap = kDefaultViolationCap);

// Regular-module faithfulness: h -> (a -> h a) injective.
Nondegeneracy nondegenerate_via_regular(const HomAlgebra& a);
// Same test with the module slot restricted to the image of alpha.
Nondegeneracy strongly_nondegenerate_via_regular(const HomAlgebra& a);

}  // namespace homcat
