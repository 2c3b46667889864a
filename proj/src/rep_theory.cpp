#include "homcat/rep_theory.hpp"

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

void require_same_field(Field a, Field b) {
  if (!(a == b)) throw FieldMismatch("structures over " + a.name() + " and " + b.name());
}

// sum_i coeffs[i] * blocks[i]
LinMap combine(const std::vector<LinMap>& blocks, const Vec& coeffs, Field f, std::size_t dim) {
  LinMap out(f, dim, dim);
  for (std::size_t i = 0; i < blocks.size(); ++i) out.add_scaled(coeffs[i], blocks[i]);
  return out;
}

// Blocks of the operators of T(e_h) for a linear map T on H.
std::vector<LinMap> transformed_blocks(const std::vector<LinMap>& blocks, const LinMap& t,
                                       Field f, std::size_t dim) {
  std::vector<LinMap> out;
  out.reserve(blocks.size());
  for (std::size_t h = 0; h < blocks.size(); ++h) out.push_back(combine(blocks, t.col(h), f, dim));
  return out;
}

std::vector<LinMap> tensor_blocks(const HomBialgebra& h, const std::vector<LinMap>& mb,
                                  const std::vector<LinMap>& nb, Field f, std::size_t dim) {
  const std::size_t n = h.dim;
  std::vector<LinMap> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    LinMap acc(f, dim, dim);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const FieldElem& c = h.comul(flatten(p, q, n), k);
        if (!c.is_zero()) acc.add_scaled(c, kron(mb[p], nb[q]));
      }
    out.push_back(std::move(acc));
  }
  return out;
}

void compare_blocks(CheckReport& r, std::string_view id, const std::vector<LinMap>& lhs,
                    const std::vector<LinMap>& rhs, std::size_t dim) {
  std::array<std::size_t, 1> d1{dim};
  r.touch(id);
  for (std::size_t h = 0; h < lhs.size(); ++h) {
    std::array<std::size_t, 1> prefix{h};
    r.expect_equal(id, lhs[h], rhs[h], d1, prefix);
  }
}

}  // namespace

void HModule::validate(std::size_t hd) const {
  if (dim == 0) throw DimensionMismatch("module of dimension 0");
  require_shape(action, dim, hd * dim, "module action");
  require_shape(alpha, dim, dim, "module alpha");
  require_same_field(action.field(), alpha.field());
}

void HComodule::validate(std::size_t cd) const {
  if (dim == 0) throw DimensionMismatch("comodule of dimension 0");
  require_shape(coaction, cd * dim, dim, "comodule coaction");
  require_shape(psi, dim, dim, "comodule psi");
  require_same_field(coaction.field(), psi.field());
}

std::vector<LinMap> action_blocks(const HModule& m) {
  const std::size_t hd = m.hdim();
  std::vector<LinMap> blocks;
  blocks.reserve(hd);
  for (std::size_t h = 0; h < hd; ++h) blocks.push_back(m.action.col_block(h * m.dim, m.dim));
  return blocks;
}

LinMap element_action(const HModule& m, const Vec& h) {
  if (h.size() != m.hdim()) throw DimensionMismatch("element length vs module");
  return combine(action_blocks(m), h, m.field(), m.dim);
}

HModule module_from_blocks(const std::vector<LinMap>& blocks, LinMap alpha) {
  const std::size_t dim = alpha.rows();
  LinMap action(alpha.field(), dim, blocks.size() * dim);
  for (std::size_t h = 0; h < blocks.size(); ++h) {
    require_shape(blocks[h], dim, dim, "action block");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) action(i, flatten(h, j, dim)) = blocks[h](i, j);
  }
  return {dim, std::move(action), std::move(alpha)};
}

std::vector<LinMap> coaction_blocks(const HComodule& m, std::size_t cdim) {
  m.validate(cdim);
  std::vector<LinMap> blocks;
  for (std::size_t c = 0; c < cdim; ++c) {
    LinMap b(m.field(), m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) b(i, j) = m.coaction(flatten(c, i, m.dim), j);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

LinMap coaction_from_blocks(const std::vector<LinMap>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t dim = blocks.front().rows();
  LinMap out(blocks.front().field(), blocks.size() * dim, dim);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    require_shape(blocks[c], dim, dim, "coaction block");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) out(flatten(c, i, dim), j) = blocks[c](i, j);
  }
  return out;
}

HModule regular_module(const HomAlgebra& a) {
  a.validate();
  return {a.dim, a.mul, a.alpha};
}

HModule zero_module(Field f, std::size_t hdim, LinMap alpha) {
  const std::size_t dim = alpha.rows();
  return {dim, LinMap(f, dim, hdim * dim), std::move(alpha)};
}

HComodule regular_comodule(const HomCoalgebra& c) {
  c.validate();
  return {c.dim, c.comul, c.psi};
}

HModule conjugate_module(const HModule& m, const LinMap& p) {
  const LinMap pinv = inverse(p);
  std::vector<LinMap> blocks;
  for (const auto& b : action_blocks(m)) blocks.push_back(compose({p, b, pinv}));
  return module_from_blocks(blocks, compose({p, m.alpha, pinv}));
}

CheckReport check_module(const HomAlgebra& a, const HModule& m, std::size_t cap) {
  a.validate();
  m.validate(a.dim);
  require_same_field(a.field(), m.field());
  CheckReport r(cap);
  const auto blocks = action_blocks(m);
  const auto alpha_blocks = transformed_blocks(blocks, a.alpha, m.field(), m.dim);
  std::array<std::size_t, 1> d1{m.dim};

  r.touch("eq8");
  for (std::size_t h = 0; h < a.dim; ++h) {
    std::array<std::size_t, 1> prefix{h};
    r.expect_equal("eq8", compose(m.alpha, blocks[h]), compose(alpha_blocks[h], m.alpha), d1,
                   prefix);
  }
  r.touch("eq9");
  for (std::size_t h = 0; h < a.dim; ++h)
    for (std::size_t g = 0; g < a.dim; ++g) {
      LinMap product = combine(blocks, a.mul.col(flatten(h, g, a.dim)), m.field(), m.dim);
      std::array<std::size_t, 2> prefix{h, g};
      r.expect_equal("eq9", compose(alpha_blocks[h], blocks[g]), compose(product, m.alpha), d1,
                     prefix);
    }
  return r;
}

CheckReport check_module(const HomBialgebra& h, const HModule& m, std::size_t cap) {
  return check_module(h.algebra(), m, cap);
}

CheckReport check_comodule(const HomCoalgebra& c, const HComodule& m, std::size_t cap) {
  c.validate();
  m.validate(c.dim);
  require_same_field(c.field(), m.field());
  CheckReport r(cap);
  std::array<std::size_t, 1> d1{m.dim};
  r.expect_equal("comodul1", compose(kron(c.psi, m.psi), m.coaction),
                 compose(m.coaction, m.psi), d1);
  r.expect_equal("comodul2", compose(kron(c.comul, m.psi), m.coaction),
                 compose(kron(c.psi, m.coaction), m.coaction), d1);
  return r;
}

HModule tensor_module(const HomBialgebra& h, const HModule& m, const HModule& n) {
  h.validate();
  m.validate(h.dim);
  n.validate(h.dim);
  require_same_field(m.field(), n.field());
  require_same_field(h.field(), m.field());
  const std::size_t dim = m.dim * n.dim;
  return module_from_blocks(tensor_blocks(h, action_blocks(m), action_blocks(n), m.field(), dim),
                            kron(m.alpha, n.alpha));
}

HModule twist_module(const HomBialgebra& h, const HModule& m, Twist which) {
  h.validate();
  m.validate(h.dim);
  require_same_field(h.field(), m.field());
  const LinMap& t = which == Twist::F ? h.psi : h.alpha;
  return module_from_blocks(transformed_blocks(action_blocks(m), t, m.field(), m.dim), m.alpha);
}

CheckReport check_module_morphism(const LinMap& f, const HomAlgebra& a, const HModule& m,
                                  const HModule& n) {
  a.validate();
  m.validate(a.dim);
  n.validate(a.dim);
  require_shape(f, n.dim, m.dim, "module morphism");
  CheckReport r;
  std::array<std::size_t, 1> d1{m.dim};
  r.expect_equal("morph.module_alpha", compose(n.alpha, f), compose(f, m.alpha), d1);
  const auto mb = action_blocks(m);
  const auto nb = action_blocks(n);
  r.touch("morph.module_action");
  for (std::size_t h = 0; h < a.dim; ++h) {
    std::array<std::size_t, 1> prefix{h};
    r.expect_equal("morph.module_action", compose(f, mb[h]), compose(nb[h], f), d1, prefix);
  }
  return r;
}

CheckReport check_module_morphism(const LinMap& f, const HomBialgebra& h, const HModule& m,
                                  const HModule& n) {
  return check_module_morphism(f, h.algebra(), m, n);
}

CheckReport phi_check(const HomBialgebra& h, const HModule& m, std::span<const ModuleArrow> arrows) {
  h.validate();
  m.validate(h.dim);
  CheckReport r;
  // alpha_M : M -> G(M) commutes with the structure maps and is H-linear.
  const HModule gm = twist_module(h, m, Twist::G);
  std::array<std::size_t, 1> dm{m.dim};
  r.expect_equal("phi.alpha", compose(gm.alpha, m.alpha), compose(m.alpha, m.alpha), dm);
  const auto mb = action_blocks(m);
  const auto gb = action_blocks(gm);
  r.touch("phi.module");
  for (std::size_t k = 0; k < h.dim; ++k) {
    std::array<std::size_t, 1> prefix{k};
    r.expect_equal("phi.module", compose(m.alpha, mb[k]), compose(gb[k], m.alpha), dm, prefix);
  }
  r.touch("phi.natural");
  std::size_t k = 0;
  for (const auto& arrow : arrows) {
    arrow.target.validate(h.dim);
    require_shape(arrow.map, arrow.target.dim, m.dim, "naturality arrow");
    std::array<std::size_t, 1> d1{m.dim};
    std::array<std::size_t, 1> prefix{k++};
    r.expect_equal("phi.natural", compose(arrow.map, m.alpha),
                   compose(arrow.target.alpha, arrow.map), d1, prefix);
  }
  return r;
}

CheckReport check_associator_instance(const HomBialgebra& h, const HModule& u, const HModule& v,
                                      const HModule& w) {
  h.validate();
  for (const HModule* m : {&u, &v, &w}) {
    m->validate(h.dim);
    require_same_field(h.field(), m->field());
  }
  const Field f = h.field();
  const std::size_t d = u.dim * v.dim * w.dim;
  const auto ub = action_blocks(u), vb = action_blocks(v), wb = action_blocks(w);
  // Same blocks as (U (x) V) (x) F(W) and F(U) (x) (V (x) W), without the module copies.
  const auto left = tensor_blocks(h, tensor_blocks(h, ub, vb, f, u.dim * v.dim),
                                  transformed_blocks(wb, h.psi, f, w.dim), f, d);
  const auto right = tensor_blocks(h, transformed_blocks(ub, h.psi, f, u.dim),
                                   tensor_blocks(h, vb, wb, f, v.dim * w.dim), f, d);
  CheckReport r;
  compare_blocks(r, "eq5.modules", left, right, d);
  return r;
}

CheckReport check_twist_compatibility(const HomBialgebra& h, const HModule& m, const HModule& n) {
  CheckReport r;
  const HModule mn = tensor_module(h, m, n);
  const std::size_t dim = mn.dim;
  auto fm = twist_module(h, m, Twist::F), fn = twist_module(h, n, Twist::F);
  auto gm = twist_module(h, m, Twist::G), gn = twist_module(h, n, Twist::G);
  compare_blocks(r, "eq7111.modules", action_blocks(twist_module(h, mn, Twist::F)),
                 action_blocks(tensor_module(h, fm, fn)), dim);
  compare_blocks(r, "eq7.modules", action_blocks(twist_module(h, mn, Twist::G)),
                 action_blocks(tensor_module(h, gm, gn)), dim);
  compare_blocks(r, "alpha_psi_commute.modules", action_blocks(twist_module(h, gm, Twist::F)),
                 action_blocks(twist_module(h, fm, Twist::G)), m.dim);
  compare_blocks(r, "alpha_psi_commute.modules", action_blocks(twist_module(h, gn, Twist::F)),
                 action_blocks(twist_module(h, fn, Twist::G)), n.dim);
  return r;
}

CheckReport check_module_hom_algebra(const HomBialgebra& h, const HomAlgebra& a,
                                     const HModule& act) {
  h.validate();
  a.validate();
  act.validate(h.dim);
  if (act.dim != a.dim) throw DimensionMismatch("module and algebra dimensions differ");
  if (!(act.alpha == a.alpha))
    throw PreconditionError("module structure map differs from the algebra twist",
                            {"alpha-mismatch"});
  CheckReport r;
  r.absorb(check_hom_algebra(a));
  r.absorb(check_module(h, act));
  const auto blocks = action_blocks(act);
  const LinMap twist = compose(h.alpha, h.psi);
  std::array<std::size_t, 2> d2{a.dim, a.dim};
  r.touch("compmodulealgebra");
  for (std::size_t k = 0; k < h.dim; ++k) {
    LinMap lhs = compose(combine(blocks, twist.col(k), a.field(), a.dim), a.mul);
    LinMap rhs(a.field(), a.dim, a.dim * a.dim);
    for (std::size_t p = 0; p < h.dim; ++p)
      for (std::size_t q = 0; q < h.dim; ++q) {
        const FieldElem& c = h.comul(flatten(p, q, h.dim), k);
        if (!c.is_zero()) rhs.add_scaled(c, compose(a.mul, kron(blocks[p], blocks[q])));
      }
    std::array<std::size_t, 1> prefix{k};
    r.expect_equal("compmodulealgebra", lhs, rhs, d2, prefix);
  }
  return r;
}

}  // namespace homcat
