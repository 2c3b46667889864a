#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homcat/hom_structures.hpp"

namespace homcat {

// action: dim x (hdim * dim), column flatten(h, m) holds e_h . e_m.
struct HModule {
  std::size_t dim = 0;
  LinMap action;
  LinMap alpha;

  Field field() const { return alpha.field(); }
  std::size_t hdim() const { return dim ? action.cols() / dim : 0; }
  void validate(std::size_t hdim) const;
};

// coaction: (cdim * dim) x dim, column m holds sum m(-1) (x) m(0).
struct HComodule {
  std::size_t dim = 0;
  LinMap coaction;
  LinMap psi;

  Field field() const { return psi.field(); }
  void validate(std::size_t cdim) const;
};

enum class Twist { F, G };  // precompose the H slot with psi (F) or alpha (G)

// A morphism f : M -> target used for naturality checks.
struct ModuleArrow {
  LinMap map;
  HModule target;
};

// Operators of the basis elements: block h is the dim x dim matrix of m -> e_h . m.
std::vector<LinMap> action_blocks(const HModule& m);
// Operator of an arbitrary element h = sum h_i e_i.
LinMap element_action(const HModule& m, const Vec& h);
HModule module_from_blocks(const std::vector<LinMap>& blocks, LinMap alpha);

// Block c is the dim x dim matrix m -> component of lambda(m) along e_c.
std::vector<LinMap> coaction_blocks(const HComodule& m, std::size_t cdim);
LinMap coaction_from_blocks(const std::vector<LinMap>& blocks);

HModule regular_module(const HomAlgebra& a);
HModule zero_module(Field f, std::size_t hdim, LinMap alpha);
HComodule regular_comodule(const HomCoalgebra& c);
// Same module transported along an invertible change of basis p : M -> M'.
HModule conjugate_module(const HModule& m, const LinMap& p);

CheckReport check_module(const HomAlgebra& a, const HModule& m,
                         std::size_t cap = kDefaultViolationCap);
CheckReport check_module(const HomBialgebra& h, const HModule& m,
                         std::size_t cap = kDefaultViolationCap);
CheckReport check_comodule(const HomCoalgebra& c, const HComodule& m,
                           std::size_t cap = kDefaultViolationCap);

HModule tensor_module(const HomBialgebra& h, const HModule& m, const HModule& n);
HModule twist_module(const HomBialgebra& h, const HModule& m, Twist which);

CheckReport phi_check(const HomBialgebra& h, const HModule& m,
                      std::span<const ModuleArrow> arrows = {});
CheckReport check_associator_instance(const HomBialgebra& h, const HModule& u, const HModule& v,
                                      const HModule& w);
// F(M (x) N) = F(M) (x) F(N), G(M (x) N) = G(M) (x) G(N), FG(M) = GF(M).
CheckReport check_twist_compatibility(const HomBialgebra& h, const HModule& m, const HModule& n);
CheckReport check_module_morphism(const LinMap& f, const HomBialgebra& h, const HModule& m,
                                  const HModule& n);
CheckReport check_module_morphism(const LinMap& f, const HomAlgebra& a, const HModule& m,
                                  const HModule& n);
// `act` is an H-module structure on the underlying space of `a`.
CheckReport check_module_hom_algebra(const HomBialgebra& h, const HomAlgebra& a,
                                     const HModule& act);

}  // namespace homcat
