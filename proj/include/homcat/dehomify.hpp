#pragma once

#include <map>
#include <span>
#include <string>
#include <tuple>

#include "homcat/yetter_drinfeld.hpp"

namespace homcat {

// kron(theta_u^{-1}, kron(id_dv, theta_w)); the hom-associator is the identity
// on flat indices.
LinMap build_b(const LinMap& theta_u, const LinMap& theta_w, std::size_t dv);
// kron(phi_v^{-1}, phi_u^{-1}) o d
LinMap build_c(const LinMap& phi_u, const LinMap& phi_v, const LinMap& d);

// Modules are identified by label. Tensor objects get the label "(A,B)" and
// their theta/phi are always kron of the factors'.
class ConstraintFamily {
 public:
  void add_module(const std::string& label, std::size_t dim, LinMap theta, LinMap phi);
  // Registers (and returns the label of) a tensor object if absent.
  std::string tensor(const std::string& a, const std::string& b);

  void set_b(const std::string& u, const std::string& v, const std::string& w, LinMap b);
  void set_c(const std::string& u, const std::string& v, LinMap c);
  // b from theta, c from phi over a supplied hom-braiding d.
  void derive_b(const std::string& u, const std::string& v, const std::string& w);
  void derive_c(const std::string& u, const std::string& v, const LinMap& d);

  bool has(const std::string& label) const { return objects_.count(label) != 0; }
  std::size_t dim(const std::string& label) const;
  const LinMap& theta(const std::string& label) const;
  const LinMap& phi(const std::string& label) const;
  // Throw Error("missing family entry ...") when absent.
  const LinMap& b(const std::string& u, const std::string& v, const std::string& w) const;
  const LinMap& c(const std::string& u, const std::string& v) const;

 private:
  struct Object {
    std::size_t dim;
    LinMap theta;
    LinMap phi;
  };
  const Object& object(const std::string& label) const;

  std::map<std::string, Object> objects_;
  std::map<std::tuple<std::string, std::string, std::string>, LinMap> b_;
  std::map<std::pair<std::string, std::string>, LinMap> c_;
};

std::string tensor_label(const std::string& a, const std::string& b);

CheckReport check_pentagon(const ConstraintFamily& fam, const std::string& u, const std::string& v,
                           const std::string& w, const std::string& x);
// Both hexagons; the second one through inverses of the b maps.
CheckReport check_hexagons(const ConstraintFamily& fam, const std::string& u,
                           const std::string& v, const std::string& w);

// A morphism between two objects of a family.
struct FamilyArrow {
  std::string src;
  std::string dst;
  LinMap map;
};
// b_{U',V',W'} o (f (x) g (x) h) = (f (x) g (x) h) o b_{U,V,W}
CheckReport check_b_natural(const ConstraintFamily& fam, const FamilyArrow& f,
                            const FamilyArrow& g, const FamilyArrow& h);
// c_{U',V'} o (f (x) g) = (g (x) f) o c_{U,V}
CheckReport check_c_natural(const ConstraintFamily& fam, const FamilyArrow& f,
                            const FamilyArrow& g);

// build_c(alpha_M, alpha_N, B_{M,N}) against the quasi-braiding.
CheckReport cross_check_yd(const YdBase& h, const YDModule& m, const YDModule& n);

// A family over YD modules with theta = phi = alpha, b from theta and c from
// build_c over B. Tensor objects are built with yd_tensor.
class YdFamily {
 public:
  explicit YdFamily(YdBase h) : h_(std::move(h)) {}

  void add_module(const std::string& label, const YDModule& m);
  std::string tensor(const std::string& a, const std::string& b);
  const YDModule& module(const std::string& label) const;

  void prepare_pentagon(const std::string& u, const std::string& v, const std::string& w,
                        const std::string& x);
  void prepare_hexagons(const std::string& u, const std::string& v, const std::string& w);

  const ConstraintFamily& family() const { return fam_; }
  const YdBase& base() const { return h_; }

 private:
  void ensure_b(const std::string& u, const std::string& v, const std::string& w);
  void ensure_c(const std::string& u, const std::string& v);

  YdBase h_;
  std::map<std::string, YDModule> modules_;
  ConstraintFamily fam_;
};

}  // namespace homcat
