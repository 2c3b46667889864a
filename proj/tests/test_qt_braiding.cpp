#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "fixtures.hpp"
#include "homcat/error.hpp"
#include "oracle.hpp"

using namespace homcat;
using fixtures::Fp;
using fixtures::Q;

namespace {

RMatrix r_z2(Field f, std::initializer_list<long> c) {
  Vec v;
  for (long x : c) v.emplace_back(f, x);
  return {2, v};
}

LinMap diag(Field f, std::initializer_list<long> d) {
  Vec v;
  for (long x : d) v.emplace_back(f, x);
  return LinMap::diagonal(v);
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("R = 0 satisfies every condition") {
  for (const HomBialgebra& h : {fixtures::classical_group(2), fixtures::twisted_group(3, 2),
                                fixtures::twisted_group(4, 3)}) {
    const RMatrix zero{h.dim, Vec(h.dim * h.dim, FieldElem(h.field(), 0))};
    const CheckReport r = check_r_conditions(h, zero);
    CHECK(r.pass());
    for (const char* id : {"r.alpha_invariant", "r.psi_invariant", "eq29", "eq30", "eq31", "eq38",
                           "eq39", "eq60"})
      CHECK_MESSAGE(r.passed(id), id);
    const HModule reg = regular_module(h.algebra());
    CHECK(braiding_from_r(h, zero, reg, reg).map.is_zero());
    CHECK(check_braiding_morphism(h, zero, reg, reg).pass());
    CHECK(check_hexagon_instances(h, zero, reg, reg, reg).pass());
    CHECK(b_from_qt(h, zero, reg).is_zero());
  }
}

TEST_CASE("the triangular R on k[Z2]") {
  for (std::uint64_t p : {0ull, 3ull, 5ull, 7ull}) {
    const Field f = p ? Fp(p) : Q();
    auto [h, r] = gen_kz2_qt(f);
    const FieldElem half = FieldElem(f, 1) / FieldElem(f, 2);
    CHECK(r.coeffs == Vec{half, half, half, -half});
    const CheckReport rep = check_r_conditions(h, r);
    CHECK(rep.pass());
    CHECK(oracle::r_eq38(h, r));
    CHECK(oracle::r_eq39(h, r));
    CHECK(oracle::r_eq60(h, r));

    const HModule reg = regular_module(h.algebra());
    const LinMap c = braiding_from_r(h, r, reg, reg).map;
    CHECK(c == oracle::braid_matrix(h, r, reg, reg));
    CHECK(oracle::naive_product(c, c) == LinMap::identity(f, 4));
    CHECK(check_braiding_morphism(h, r, reg, reg).pass());
    CHECK(check_hexagon_instances(h, r, reg, reg, reg).pass());

    const LinMap b = b_from_qt(h, r, reg);
    CHECK(b == c);  // alpha = id
    CHECK(check_hom_ybe(b, reg.alpha).pass());
    CHECK(oracle::hom_ybe(b, reg.alpha));
    CHECK(check_mixed_hom_ybe(b, b, b, reg.alpha, reg.alpha, reg.alpha).pass());
  }
  CHECK_THROWS_AS(gen_kz2_qt(Fp(2)), PreconditionError);
}

TEST_CASE("R = 1 (x) 1 braids the regular module by the flip") {
  const HomBialgebra h = fixtures::classical_group(2);
  const HModule reg = regular_module(h.algebra());
  CHECK(braiding_from_r(h, r_z2(Q(), {1, 0, 0, 0}), reg, reg).map == flip_map(Q(), 2, 2));
}

TEST_CASE("R = 1 (x) g: eq39 fails, and only the second hexagon notices") {
  const HomBialgebra h = fixtures::classical_group(2);
  const RMatrix r = fixtures::r_one_g();
  const CheckReport rep = check_r_conditions(h, r);
  CHECK(rep.failed("eq39"));
  CHECK(rep.passed("eq38"));
  CHECK(rep.passed("eq60"));
  CHECK_FALSE(oracle::r_eq39(h, r));
  CHECK(oracle::r_eq38(h, r));
  CHECK(oracle::r_eq60(h, r));

  const HModule reg = regular_module(h.algebra());
  REQUIRE(nondegenerate_via_regular(h.algebra()) == Nondegeneracy::Nondegenerate);
  // Linearity of c tracks eq38.
  CHECK(check_braiding_morphism(h, r, reg, reg).passed("eq27.linear") == rep.passed("eq38"));

  // By hand, c(u (x) v) = gv (x) u. Then c_{U,V(x)W}(u v w) = gv gw u =
  // (1 (x) c)(c (x) 1)(u v w), while c_{U(x)V,W}(u v w) = gw u v and
  // (c (x) 1)(1 (x) c)(u v w) = w u v.
  const auto perm3 = [&](auto fn) {
    LinMap m(Q(), 8, 8);
    for (std::size_t u = 0; u < 2; ++u)
      for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t w = 0; w < 2; ++w) {
          auto [a, b, c] = fn(u, v, w);
          m(flatten(flatten(a, b, 2), c, 2), flatten(flatten(u, v, 2), w, 2)) = FieldElem(Q(), 1);
        }
    return m;
  };
  const auto g = [](std::size_t x) { return (x + 1) % 2; };
  const LinMap h1_lhs = perm3([&](auto u, auto v, auto w) { return std::tuple{g(v), g(w), u}; });
  const LinMap h1_rhs = perm3([&](auto u, auto v, auto w) { return std::tuple{g(v), g(w), u}; });
  const LinMap h2_lhs = perm3([&](auto u, auto v, auto w) { return std::tuple{g(w), u, v}; });
  const LinMap h2_rhs = perm3([&](auto u, auto v, auto w) { return std::tuple{w, u, v}; });
  CHECK(h1_lhs == h1_rhs);
  CHECK_FALSE(h2_lhs == h2_rhs);
  // The element braiding confirms the building block.
  const LinMap c = oracle::braid_matrix(h, r, reg, reg);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t v = 0; v < 2; ++v)
      CHECK(c.col(flatten(u, v, 2)) == oracle::basis(Q(), 4, flatten(g(v), u, 2)));

  const CheckReport hex = check_hexagon_instances(h, r, reg, reg, reg);
  CHECK(hex.passed("eq45"));
  CHECK(hex.failed("eq50"));

  try {
    b_from_qt(h, r, reg);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(contains(e.failed(), "eq39"));
  }
}

TEST_CASE("R conditions agree with the element oracle on random R") {
  int failing = 0;
  for (const HomBialgebra& h : {fixtures::classical_group(2, Fp(3)), fixtures::classical_group(3, Fp(3)),
                                fixtures::twisted_group(3, 2, Fp(3))}) {
    for (int t = 0; t < 15; ++t) {
      const LinMap col = fixtures::random_matrix(h.field(), h.dim * h.dim, 1, -1, 1);
      const RMatrix r{h.dim, col.col(0)};
      const CheckReport rep = check_r_conditions(h, r);
      CHECK(rep.passed("eq38") == oracle::r_eq38(h, r));
      CHECK(rep.passed("eq39") == oracle::r_eq39(h, r));
      CHECK(rep.passed("eq60") == oracle::r_eq60(h, r));
      // Only evaluated when psi fixes R.
      CHECK(rep.status("eq30.agreement").value_or(true));
      CHECK(rep.status("eq31.agreement").value_or(true));
      if (!rep.pass()) ++failing;
    }
  }
  CHECK(failing > 10);
}

TEST_CASE("quasitriangular fixtures give braidings, hexagons and YBE solutions") {
  for (const auto& fx : fixtures::qt_pool()) {
    INFO(fx.name);
    REQUIRE(check_hom_bialgebra(fx.h).pass());
    REQUIRE(check_r_conditions(fx.h, fx.r).pass());
    CHECK(oracle::r_eq38(fx.h, fx.r));
    CHECK(oracle::r_eq39(fx.h, fx.r));
    CHECK(oracle::r_eq60(fx.h, fx.r));
    const auto pool = fixtures::module_pool(fx.h, 1);
    for (const auto& u : pool) {
      const LinMap b = b_from_qt(fx.h, fx.r, u.m);
      CHECK(check_hom_ybe(b, u.m.alpha).pass());
      CHECK(oracle::hom_ybe(b, u.m.alpha));
      for (const auto& v : pool) {
        if (u.m.dim * v.m.dim > 16) continue;
        CHECK(braiding_from_r(fx.h, fx.r, u.m, v.m).map ==
              oracle::braid_matrix(fx.h, fx.r, u.m, v.m));
        // Naturality against random isomorphisms of both factors.
        const LinMap p = fixtures::random_invertible(fx.h.field(), u.m.dim);
        const LinMap q = fixtures::random_invertible(fx.h.field(), v.m.dim);
        const NaturalitySquare sq{p, conjugate_module(u.m, p), q, conjugate_module(v.m, q)};
        const CheckReport rep =
            check_braiding_morphism(fx.h, fx.r, u.m, v.m, std::span<const NaturalitySquare>(&sq, 1));
        CHECK(rep.pass());
        CHECK(rep.passed("eq27.G"));
        for (const auto& w : pool) {
          if (u.m.dim * v.m.dim * w.m.dim > 27) continue;
          CHECK(check_hexagon_instances(fx.h, fx.r, u.m, v.m, w.m).pass());
        }
      }
    }
  }
}

TEST_CASE("naturality fails for a map that is not a module morphism") {
  auto [h, r] = gen_kz2_qt();
  const HModule reg = regular_module(h.algebra());
  const LinMap proj = LinMap::from_ints(Q(), {{1, 0}, {0, 0}});
  const NaturalitySquare sq{proj, reg, LinMap::identity(Q(), 2), reg};
  CHECK(check_braiding_morphism(h, r, reg, reg, std::span<const NaturalitySquare>(&sq, 1))
            .failed("eq27.natural"));
}

TEST_CASE("hom-YBE examples") {
  const Field f = Q();
  for (std::size_t d : {1, 2, 3}) {
    CHECK(check_hom_ybe(flip_map(f, d, d), LinMap::identity(f, d)).pass());
    CHECK(check_hom_ybe(LinMap(f, d * d, d * d), fixtures::random_matrix(f, d, d, -2, 2)).pass());
  }
  // B(e0 (x) e0) = e0 (x) e1, zero elsewhere: both composites vanish.
  LinMap single(f, 4, 4);
  single(flatten(0, 1, 2), flatten(0, 0, 2)) = FieldElem(f, 1);
  CHECK(oracle::hom_ybe(single, LinMap::identity(f, 2)));
  CHECK(check_hom_ybe(single, LinMap::identity(f, 2)).pass());
  // e0 (x) e0 -> e0 (x) e1 on top of the identity does not braid.
  LinMap shear = LinMap::identity(f, 4);
  shear(flatten(0, 1, 2), flatten(0, 0, 2)) = FieldElem(f, 1);
  shear = compose(flip_map(f, 2, 2), shear);
  const bool shear_ok = oracle::hom_ybe(shear, LinMap::identity(f, 2));
  CHECK(check_hom_ybe(shear, LinMap::identity(f, 2)).passed("eq145") == shear_ok);
  CHECK_FALSE(shear_ok);
  CHECK_THROWS_AS(check_hom_ybe(LinMap(f, 3, 3), LinMap::identity(f, 2)), DimensionMismatch);
}

TEST_CASE("hom-YBE checker agrees with the oracle and ignores rescaling") {
  int passing = 0, failing = 0;
  for (int t = 0; t < 30; ++t) {
    const Field f = Fp(3);
    LinMap b(f, 4, 4);
    // Sparse random maps so that both verdicts occur.
    const LinMap dense = fixtures::random_matrix(f, 4, 4, -1, 1);
    const LinMap mask = fixtures::random_matrix(f, 4, 4, 0, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (mask(i, j).is_zero()) b(i, j) = dense(i, j);
    const LinMap alpha = t % 2 ? LinMap::identity(f, 2) : fixtures::random_matrix(f, 2, 2, -1, 1);
    const bool want = oracle::hom_ybe(b, alpha);
    const CheckReport r = check_hom_ybe(b, alpha);
    CHECK(r.pass() == want);
    CHECK(check_classical_ybe(b).pass() == oracle::classical_ybe(b));
    for (long s : {2, -1}) CHECK(check_hom_ybe(b.scaled(FieldElem(f, s)), alpha).pass() == want);
    (want ? passing : failing)++;
  }
  CHECK(passing > 0);
  CHECK(failing > 0);

  for (int t = 0; t < 10; ++t) {
    const auto m = fixtures::random_monomial_ybe(Q(), 3);
    const FieldElem third = FieldElem(Q(), 1) / FieldElem(Q(), 3);
    CHECK(check_hom_ybe(m.b, m.alpha).pass() == check_hom_ybe(m.b.scaled(third), m.alpha).pass());
  }
}

TEST_CASE("Yau twists of classical YBE solutions") {
  const Field f = Q();
  CHECK(ybe_yau_twist(flip_map(f, 2, 2), LinMap::identity(f, 2)) == flip_map(f, 2, 2));

  const LinMap t = ybe_yau_twist(flip_map(f, 2, 2), diag(f, {1, 2}));
  CHECK(t == LinMap::from_ints(f, {{1, 0, 0, 0}, {0, 0, 2, 0}, {0, 2, 0, 0}, {0, 0, 0, 4}}));
  CHECK(check_hom_ybe(t, diag(f, {1, 2})).pass());
  CHECK(oracle::hom_ybe(t, diag(f, {1, 2})));

  for (int k = 0; k < 10; ++k) {
    const auto m = fixtures::random_monomial_ybe(f, 3);
    REQUIRE(oracle::classical_ybe(m.b));
    const LinMap tw = ybe_yau_twist(m.b, m.alpha);
    CHECK(check_hom_ybe(tw, m.alpha).pass());
    CHECK(oracle::hom_ybe(tw, m.alpha));
  }

  LinMap shear = LinMap::identity(f, 4);
  shear(flatten(0, 1, 2), flatten(0, 0, 2)) = FieldElem(f, 1);
  shear = compose(flip_map(f, 2, 2), shear);
  REQUIRE_FALSE(oracle::classical_ybe(shear));
  try {
    ybe_yau_twist(shear, LinMap::identity(f, 2));
    FAIL("expected classical-ybe-fails");
  } catch (const PreconditionError& e) {
    CHECK(contains(e.failed(), "classical-ybe-fails"));
  }
  // e_ij -> q_ij e_ji with q_01 != q_10 does not commute with swapping the basis.
  const LinMap mono = LinMap::from_ints(f, {{1, 0, 0, 0}, {0, 0, 3, 0}, {0, 2, 0, 0}, {0, 0, 0, 1}});
  REQUIRE(oracle::classical_ybe(mono));
  try {
    ybe_yau_twist(mono, LinMap::from_ints(f, {{0, 1}, {1, 0}}));
    FAIL("expected compatibility-fails");
  } catch (const PreconditionError& e) {
    CHECK(contains(e.failed(), "compatibility-fails"));
  }
}

TEST_CASE("mixed hom-YBE") {
  const Field f = Q();
  const LinMap i2 = LinMap::identity(f, 2), i3 = LinMap::identity(f, 3);
  CHECK(check_mixed_hom_ybe(flip_map(f, 2, 3), flip_map(f, 2, 2), flip_map(f, 3, 2), i2, i3, i2).pass());
  CHECK(check_mixed_hom_ybe(LinMap(f, 6, 6), LinMap(f, 4, 4), LinMap(f, 6, 6), i2, i3, i2).pass());
  CHECK_THROWS_AS(check_mixed_hom_ybe(LinMap(f, 6, 6), LinMap(f, 6, 6), LinMap(f, 6, 6), i2, i3, i2),
                  DimensionMismatch);

  // Braidings of the triangular R between modules of different sizes.
  auto [h, r] = gen_kz2_qt();
  const auto pool = fixtures::module_pool(h, 1);
  for (const auto& u : pool)
    for (const auto& v : pool)
      for (const auto& w : pool) {
        if (u.m.dim * v.m.dim * w.m.dim > 8) continue;
        const LinMap buv = braiding_from_r(h, r, u.m, v.m).map;
        const LinMap buw = braiding_from_r(h, r, u.m, w.m).map;
        const LinMap bvw = braiding_from_r(h, r, v.m, w.m).map;
        CHECK(check_mixed_hom_ybe(buv, buw, bvw, u.m.alpha, v.m.alpha, w.m.alpha).pass());
      }
}
