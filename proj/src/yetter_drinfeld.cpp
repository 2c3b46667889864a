#include "homcat/yetter_drinfeld.hpp"

#include <array>
#include <string>

#include "homcat/error.hpp"

namespace homcat {
namespace {

void require_shape(const LinMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionMismatch(what + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                            "x" + std::to_string(cols));
}

void require_module_of(const YdBase& h, const YDModule& m) {
  m.validate(h.dim());
  if (!(m.field() == h.field())) throw FieldMismatch("module and bialgebra fields differ");
}

// Column vector of the product x y in H.
LinMap product(const YdBase& h, const LinMap& x, const LinMap& y) {
  return compose(h.bialgebra().mul, kron(x, y));
}

LinMap basis_column(const YdBase& h, std::size_t i) {
  return LinMap::column(unit_vector(h.field(), h.dim(), i));
}

LinMap b_matrix(const YdBase& h, const YDModule& m, const YDModule& n) {
  const auto cm = coaction_blocks(m.comodule(), h.dim());
  const HModule nm = n.module();
  LinMap acc(h.field(), m.dim * n.dim, m.dim * n.dim);
  for (std::size_t c = 0; c < h.dim(); ++c) {
    if (cm[c].is_zero()) continue;
    acc += kron(cm[c], element_action(nm, h.alpha_inv().col(c)));
  }
  return compose(flip_map(h.field(), m.dim, n.dim), acc);
}

}  // namespace

YdBase::YdBase(HomBialgebra h) : h_(std::move(h)) {
  h_.validate();
  if (!(h_.alpha == h_.psi))
    throw PreconditionError("Yetter-Drinfeld modules need psi = alpha", {"psi-not-alpha"});
  alpha2_ = compose(h_.alpha, h_.alpha);
  alpha_inv_ = inverse(h_.alpha);
  alpha_inv2_ = compose(alpha_inv_, alpha_inv_);
}

void YDModule::validate(std::size_t hdim) const {
  module().validate(hdim);
  comodule().validate(hdim);
}

CheckReport check_yd(const YdBase& h, const YDModule& m, std::size_t cap) {
  require_module_of(h, m);
  const HomBialgebra& hb = h.bialgebra();
  CheckReport rep(cap);
  rep.absorb(check_module(hb, m.module(), cap));
  rep.absorb(check_comodule(hb.coalgebra(), m.comodule(), cap));

  const std::size_t n = h.dim();
  const Field f = h.field();
  const auto lb = action_blocks(m.module());
  const auto cb = coaction_blocks(m.comodule(), n);
  std::vector<LinMap> e, alpha_e, alpha2_e, alpha_ops;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(basis_column(h, i));
    alpha_e.push_back(LinMap::column(h.alpha().col(i)));
    alpha2_e.push_back(LinMap::column(h.alpha2().col(i)));
    alpha_ops.push_back(element_action(m.module(), h.alpha().col(i)));
  }
  const std::array<std::size_t, 1> dm{m.dim};
  rep.touch("homYD");
  for (std::size_t k = 0; k < n; ++k) {
    LinMap lhs(f, n * m.dim, m.dim), rhs(f, n * m.dim, m.dim);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const FieldElem& d = hb.comul(flatten(p, q, n), k);
        if (d.is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          // (h(1).m)(-1) alpha^2(h(2)) (x) (h(1).m)(0)
          LinMap left = kron(product(h, e[c], alpha2_e[q]), compose(cb[c], lb[p]));
          // alpha^2(h(1)) alpha(m(-1)) (x) alpha(h(2)).m(0)
          LinMap right = kron(product(h, alpha2_e[p], alpha_e[c]), compose(alpha_ops[q], cb[c]));
          lhs.add_scaled(d, left);
          rhs.add_scaled(d, right);
        }
      }
    const std::array<std::size_t, 1> prefix{k};
    rep.expect_equal("homYD", lhs, rhs, dm, prefix);
  }
  return rep;
}

YDModule yd_tensor(const YdBase& h, const YDModule& m, const YDModule& n) {
  require_module_of(h, m);
  require_module_of(h, n);
  const std::size_t hd = h.dim();
  const HModule act = tensor_module(h.bialgebra(), m.module(), n.module());
  const auto cm = coaction_blocks(m.comodule(), hd);
  const auto cn = coaction_blocks(n.comodule(), hd);
  const LinMap t = compose(h.alpha_inv2(), h.bialgebra().mul);  // alpha^{-2}(e_a e_b)
  std::vector<LinMap> blocks;
  for (std::size_t k = 0; k < hd; ++k) {
    LinMap acc(h.field(), act.dim, act.dim);
    for (std::size_t a = 0; a < hd; ++a)
      for (std::size_t b = 0; b < hd; ++b) {
        const FieldElem& c = t(k, flatten(a, b, hd));
        if (!c.is_zero()) acc.add_scaled(c, kron(cm[a], cn[b]));
      }
    blocks.push_back(std::move(acc));
  }
  return {act.dim, act.action, coaction_from_blocks(blocks), act.alpha};
}

LinMap b_yd(const YdBase& h, const YDModule& m, const YDModule& n) {
  require_module_of(h, m);
  require_module_of(h, n);
  return b_matrix(h, m, n);
}

LinMap quasi_braiding_yd(const YdBase& h, const YDModule& m, const YDModule& n) {
  return compose(kron(inverse(n.alpha), inverse(m.alpha)), b_yd(h, m, n));
}

LinMap yd_associator(const YDModule& m, const YDModule& n, const YDModule& p) {
  return kron(inverse(m.alpha), kron(LinMap::identity(n.field(), n.dim), p.alpha));
}

YDModule f_twist_yd(const YdBase& h, const YDModule& m) {
  require_module_of(h, m);
  const HModule act = twist_module(h.bialgebra(), m.module(), Twist::F);
  const LinMap coaction = compose(kron(h.alpha_inv(), LinMap::identity(h.field(), m.dim)), m.coaction);
  return {m.dim, act.action, coaction, m.alpha};
}

YDModule conjugate_yd(const YDModule& m, const LinMap& p) {
  const std::size_t hd = m.dim ? m.action.cols() / m.dim : 0;
  m.validate(hd);
  require_shape(p, m.dim, m.dim, "change of basis");
  const LinMap pinv = inverse(p);
  const HModule act = conjugate_module(m.module(), p);
  const LinMap coaction =
      compose({kron(LinMap::identity(m.field(), hd), p), m.coaction, pinv});
  return {m.dim, act.action, coaction, act.alpha};
}

CheckReport check_b_yd(const YdBase& h, const YDModule& m, const YDModule& n) {
  require_module_of(h, m);
  require_module_of(h, n);
  const LinMap b = b_matrix(h, m, n);
  const std::array<std::size_t, 2> dmn{m.dim, n.dim};
  CheckReport rep;
  rep.expect_equal("defB.alpha", compose(kron(n.alpha, m.alpha), b),
                   compose(b, kron(m.alpha, n.alpha)), dmn);

  const YDModule fm = f_twist_yd(h, m), fn = f_twist_yd(h, n);
  const YDModule src = yd_tensor(h, m, n);
  const YDModule dst = yd_tensor(h, fn, fm);
  const auto sb = action_blocks(src.module());
  const auto db = action_blocks(dst.module());
  rep.touch("defB.module");
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const std::array<std::size_t, 1> prefix{k};
    rep.expect_equal("defB.module", compose(b, sb[k]), compose(db[k], b), dmn, prefix);
  }
  rep.expect_equal("defB.comodule",
                   compose(kron(LinMap::identity(h.field(), h.dim()), b), src.coaction),
                   compose(dst.coaction, b), dmn);
  rep.expect_equal("defB.F", b_matrix(h, fm, fn), b, dmn);
  return rep;
}

CheckReport check_yd_hexagon_instances(const YdBase& h, const YDModule& u, const YDModule& v,
                                       const YDModule& w) {
  for (const YDModule* m : {&u, &v, &w}) require_module_of(h, *m);
  const Field f = h.field();
  const auto iu = LinMap::identity(f, u.dim);
  const auto iv = LinMap::identity(f, v.dim);
  const auto iw = LinMap::identity(f, w.dim);
  const YDModule fu = f_twist_yd(h, u), fw = f_twist_yd(h, w);
  const std::array<std::size_t, 3> duvw{u.dim, v.dim, w.dim};
  CheckReport rep;
  rep.expect_equal("eq45.yd",
                   compose(kron(iv, kron(iw, u.alpha)), b_matrix(h, fu, yd_tensor(h, v, w))),
                   compose(kron(iv, b_matrix(h, fu, w)), kron(b_matrix(h, u, v), iw)), duvw);
  rep.expect_equal("eq50.yd",
                   compose(kron(kron(w.alpha, iu), iv), b_matrix(h, yd_tensor(h, u, v), fw)),
                   compose(kron(b_matrix(h, u, fw), iv), kron(iu, b_matrix(h, v, w))), duvw);
  return rep;
}

}  // namespace homcat
