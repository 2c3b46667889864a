#include "homcat/dehomify.hpp"

#include <array>

#include "homcat/error.hpp"

namespace homcat {

LinMap build_b(const LinMap& theta_u, const LinMap& theta_w, std::size_t dv) {
  return kron(inverse(theta_u), kron(LinMap::identity(theta_u.field(), dv), theta_w));
}

LinMap build_c(const LinMap& phi_u, const LinMap& phi_v, const LinMap& d) {
  const std::size_t n = phi_u.rows() * phi_v.rows();
  if (d.rows() != n || d.cols() != n)
    throw DimensionMismatch("d does not map U (x) V to V (x) U");
  return compose(kron(inverse(phi_v), inverse(phi_u)), d);
}

std::string tensor_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

void ConstraintFamily::add_module(const std::string& label, std::size_t dim, LinMap theta,
                                  LinMap phi) {
  for (const LinMap* m : {&theta, &phi})
    if (m->rows() != dim || m->cols() != dim)
      throw DimensionMismatch("theta/phi of " + label + " must be " + std::to_string(dim) +
                              "x" + std::to_string(dim));
  objects_.insert_or_assign(label, Object{dim, std::move(theta), std::move(phi)});
}

std::string ConstraintFamily::tensor(const std::string& a, const std::string& b) {
  std::string label = tensor_label(a, b);
  if (!has(label)) {
    const Object& oa = object(a);
    const Object& ob = object(b);
    objects_.emplace(label, Object{oa.dim * ob.dim, kron(oa.theta, ob.theta), kron(oa.phi, ob.phi)});
  }
  return label;
}

const ConstraintFamily::Object& ConstraintFamily::object(const std::string& label) const {
  auto it = objects_.find(label);
  if (it == objects_.end()) throw Error("missing family entry: object " + label);
  return it->second;
}

std::size_t ConstraintFamily::dim(const std::string& label) const { return object(label).dim; }
const LinMap& ConstraintFamily::theta(const std::string& label) const { return object(label).theta; }
const LinMap& ConstraintFamily::phi(const std::string& label) const { return object(label).phi; }

void ConstraintFamily::set_b(const std::string& u, const std::string& v, const std::string& w,
                             LinMap b) {
  const std::size_t n = dim(u) * dim(v) * dim(w);
  if (b.rows() != n || b.cols() != n)
    throw DimensionMismatch("b_{" + u + "," + v + "," + w + "} has the wrong size");
  b_.insert_or_assign(std::make_tuple(u, v, w), std::move(b));
}

void ConstraintFamily::set_c(const std::string& u, const std::string& v, LinMap c) {
  const std::size_t n = dim(u) * dim(v);
  if (c.rows() != n || c.cols() != n)
    throw DimensionMismatch("c_{" + u + "," + v + "} has the wrong size");
  c_.insert_or_assign(std::make_pair(u, v), std::move(c));
}

void ConstraintFamily::derive_b(const std::string& u, const std::string& v, const std::string& w) {
  set_b(u, v, w, build_b(theta(u), theta(w), dim(v)));
}

void ConstraintFamily::derive_c(const std::string& u, const std::string& v, const LinMap& d) {
  set_c(u, v, build_c(phi(u), phi(v), d));
}

const LinMap& ConstraintFamily::b(const std::string& u, const std::string& v,
                                  const std::string& w) const {
  auto it = b_.find(std::make_tuple(u, v, w));
  if (it == b_.end()) throw Error("missing family entry: b_{" + u + "," + v + "," + w + "}");
  return it->second;
}

const LinMap& ConstraintFamily::c(const std::string& u, const std::string& v) const {
  auto it = c_.find(std::make_pair(u, v));
  if (it == c_.end()) throw Error("missing family entry: c_{" + u + "," + v + "}");
  return it->second;
}

CheckReport check_pentagon(const ConstraintFamily& fam, const std::string& u, const std::string& v,
                           const std::string& w, const std::string& x) {
  const Field f = fam.theta(u).field();
  const auto id = [&](const std::string& l) { return LinMap::identity(f, fam.dim(l)); };
  const std::string vw = tensor_label(v, w), uv = tensor_label(u, v), wx = tensor_label(w, x);
  const LinMap lhs = compose({kron(id(u), fam.b(v, w, x)), fam.b(u, vw, x),
                              kron(fam.b(u, v, w), id(x))});
  const LinMap rhs = compose(fam.b(u, v, wx), fam.b(uv, w, x));
  const std::array<std::size_t, 4> dims{fam.dim(u), fam.dim(v), fam.dim(w), fam.dim(x)};
  CheckReport rep;
  rep.expect_equal("eq3333c", lhs, rhs, dims);
  return rep;
}

CheckReport check_hexagons(const ConstraintFamily& fam, const std::string& u,
                           const std::string& v, const std::string& w) {
  const Field f = fam.theta(u).field();
  const auto id = [&](const std::string& l) { return LinMap::identity(f, fam.dim(l)); };
  const std::array<std::size_t, 3> dims{fam.dim(u), fam.dim(v), fam.dim(w)};
  CheckReport rep;
  rep.expect_equal(
      "eq9999d.hex1", compose({fam.b(v, w, u), fam.c(u, tensor_label(v, w)), fam.b(u, v, w)}),
      compose({kron(id(v), fam.c(u, w)), fam.b(v, u, w), kron(fam.c(u, v), id(w))}), dims);
  rep.expect_equal("eq9999d.hex2",
                   compose({inverse(fam.b(w, u, v)), fam.c(tensor_label(u, v), w),
                            inverse(fam.b(u, v, w))}),
                   compose({kron(fam.c(u, w), id(v)), inverse(fam.b(u, w, v)),
                            kron(id(u), fam.c(v, w))}),
                   dims);
  return rep;
}

CheckReport check_b_natural(const ConstraintFamily& fam, const FamilyArrow& f,
                            const FamilyArrow& g, const FamilyArrow& h) {
  const LinMap fgh = kron(f.map, kron(g.map, h.map));
  const std::array<std::size_t, 3> dims{fam.dim(f.src), fam.dim(g.src), fam.dim(h.src)};
  CheckReport rep;
  rep.expect_equal("eq3333c.natural", compose(fam.b(f.dst, g.dst, h.dst), fgh),
                   compose(fgh, fam.b(f.src, g.src, h.src)), dims);
  return rep;
}

CheckReport check_c_natural(const ConstraintFamily& fam, const FamilyArrow& f,
                            const FamilyArrow& g) {
  const std::array<std::size_t, 2> dims{fam.dim(f.src), fam.dim(g.src)};
  CheckReport rep;
  rep.expect_equal("eq9999d.natural", compose(fam.c(f.dst, g.dst), kron(f.map, g.map)),
                   compose(kron(g.map, f.map), fam.c(f.src, g.src)), dims);
  return rep;
}

CheckReport cross_check_yd(const YdBase& h, const YDModule& m, const YDModule& n) {
  const std::array<std::size_t, 2> dims{m.dim, n.dim};
  CheckReport rep;
  rep.expect_equal("eq9999d.yd_match", build_c(m.alpha, n.alpha, b_yd(h, m, n)),
                   quasi_braiding_yd(h, m, n), dims);
  return rep;
}

void YdFamily::add_module(const std::string& label, const YDModule& m) {
  m.validate(h_.dim());
  fam_.add_module(label, m.dim, m.alpha, m.alpha);
  modules_.insert_or_assign(label, m);
}

std::string YdFamily::tensor(const std::string& a, const std::string& b) {
  std::string label = tensor_label(a, b);
  if (modules_.count(label) == 0) {
    modules_.emplace(label, yd_tensor(h_, module(a), module(b)));
    fam_.tensor(a, b);
  }
  return label;
}

const YDModule& YdFamily::module(const std::string& label) const {
  auto it = modules_.find(label);
  if (it == modules_.end()) throw Error("missing family entry: object " + label);
  return it->second;
}

void YdFamily::ensure_b(const std::string& u, const std::string& v, const std::string& w) {
  fam_.derive_b(u, v, w);
}

void YdFamily::ensure_c(const std::string& u, const std::string& v) {
  fam_.derive_c(u, v, b_yd(h_, module(u), module(v)));
}

void YdFamily::prepare_pentagon(const std::string& u, const std::string& v, const std::string& w,
                                const std::string& x) {
  const std::string vw = tensor(v, w), uv = tensor(u, v), wx = tensor(w, x);
  ensure_b(v, w, x);
  ensure_b(u, vw, x);
  ensure_b(u, v, w);
  ensure_b(u, v, wx);
  ensure_b(uv, w, x);
}

void YdFamily::prepare_hexagons(const std::string& u, const std::string& v, const std::string& w) {
  const std::string vw = tensor(v, w), uv = tensor(u, v);
  ensure_b(u, v, w);
  ensure_b(v, w, u);
  ensure_b(v, u, w);
  ensure_b(w, u, v);
  ensure_b(u, w, v);
  ensure_c(u, vw);
  ensure_c(uv, w);
  ensure_c(u, v);
  ensure_c(u, w);
  ensure_c(v, w);
}

}  // namespace homcat
