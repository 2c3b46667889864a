#pragma once

#include <cstddef>
#include <span>

#include "homcat/rep_theory.hpp"

namespace homcat {

// R = sum_{i,j} coeffs[flatten(i,j)] e_i (x) e_j
struct RMatrix {
  std::size_t dim = 0;
  Vec coeffs;

  Field field() const { return coeffs.empty() ? Field() : coeffs.front().field(); }
  const FieldElem& operator()(std::size_t i, std::size_t j) const {
    return coeffs[flatten(i, j, dim)];
  }
  LinMap column() const { return LinMap::column(coeffs); }
  void validate(std::size_t hdim) const;
};

// c_{U,V} : U (x) V -> G(V) (x) G(U)
struct BraidMap {
  LinMap map;
  HModule src_u;
  HModule src_v;
};

// f : U -> u2 and g : V -> v2, both module morphisms.
struct NaturalitySquare {
  LinMap f;
  HModule u2;
  LinMap g;
  HModule v2;
};

CheckReport check_r_conditions(const HomBialgebra& h, const RMatrix& r,
                               std::size_t cap = kDefaultViolationCap);

BraidMap braiding_from_r(const HomBialgebra& h, const RMatrix& r, const HModule& u,
                         const HModule& v);
CheckReport check_braiding_morphism(const HomBialgebra& h, const RMatrix& r, const HModule& u,
                                    const HModule& v,
                                    std::span<const NaturalitySquare> squares = {});
CheckReport check_hexagon_instances(const HomBialgebra& h, const RMatrix& r, const HModule& u,
                                    const HModule& v, const HModule& w);

CheckReport check_classical_ybe(const LinMap& b);
CheckReport check_hom_ybe(const LinMap& b, const LinMap& alpha);
// b_uv : U (x) V -> V (x) U and so on.
CheckReport check_mixed_hom_ybe(const LinMap& b_uv, const LinMap& b_uw, const LinMap& b_vw,
                                const LinMap& a_u, const LinMap& a_v, const LinMap& a_w);

// B(m (x) m') = sum R_ij e_j . m' (x) e_i . m; throws PreconditionError listing
// the failing axioms when H, R or M is not valid.
LinMap b_from_qt(const HomBialgebra& h, const RMatrix& r, const HModule& m);
// (alpha (x) alpha) o B for a classical solution B commuting with alpha (x) alpha.
LinMap ybe_yau_twist(const LinMap& b, const LinMap& alpha);

}  // namespace homcat
