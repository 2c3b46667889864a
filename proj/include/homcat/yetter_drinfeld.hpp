#pragma once

#include "homcat/rep_theory.hpp"

namespace homcat {

// A hom-bialgebra with psi = alpha and alpha invertible, with the inverse
// powers of alpha computed once.
class YdBase {
 public:
  // Throws PreconditionError when psi != alpha, SingularMatrix when alpha is not invertible.
  explicit YdBase(HomBialgebra h);

  const HomBialgebra& bialgebra() const { return h_; }
  std::size_t dim() const { return h_.dim; }
  Field field() const { return h_.field(); }
  const LinMap& alpha() const { return h_.alpha; }
  const LinMap& alpha2() const { return alpha2_; }
  const LinMap& alpha_inv() const { return alpha_inv_; }
  const LinMap& alpha_inv2() const { return alpha_inv2_; }

 private:
  HomBialgebra h_;
  LinMap alpha2_;
  LinMap alpha_inv_;
  LinMap alpha_inv2_;
};

// action and coaction share one structure map alpha.
struct YDModule {
  std::size_t dim = 0;
  LinMap action;    // dim x (hdim * dim)
  LinMap coaction;  // (hdim * dim) x dim
  LinMap alpha;

  Field field() const { return alpha.field(); }
  HModule module() const { return {dim, action, alpha}; }
  HComodule comodule() const { return {dim, coaction, alpha}; }
  void validate(std::size_t hdim) const;
};

CheckReport check_yd(const YdBase& h, const YDModule& m, std::size_t cap = kDefaultViolationCap);
YDModule yd_tensor(const YdBase& h, const YDModule& m, const YDModule& n);
// B(m (x) n) = sum alpha^{-1}(m(-1)) . n (x) m(0)
LinMap b_yd(const YdBase& h, const YDModule& m, const YDModule& n);
LinMap quasi_braiding_yd(const YdBase& h, const YDModule& m, const YDModule& n);
LinMap yd_associator(const YDModule& m, const YDModule& n, const YDModule& p);
YDModule f_twist_yd(const YdBase& h, const YDModule& m);
YDModule conjugate_yd(const YDModule& m, const LinMap& p);

// The intertwining, module-morphism, comodule-morphism and twist-compatibility
// properties of B_{M,N}.
CheckReport check_b_yd(const YdBase& h, const YDModule& m, const YDModule& n);
// The two hexagon-type identities with c = B and Phi = alpha, on U, V, W.
CheckReport check_yd_hexagon_instances(const YdBase& h, const YDModule& u, const YDModule& v,
                                       const YDModule& w);

}  // namespace homcat
