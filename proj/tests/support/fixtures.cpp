#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

std::mt19937& rng() {
  static std::mt19937 g(20240917u);
  return g;
}

LinMap random_matrix(Field f, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  LinMap m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = FieldElem(f, dist(rng()));
  return m;
}

LinMap random_invertible(Field f, std::size_t n) {
  for (;;) {
    LinMap m = random_matrix(f, n, n, -2, 2);
    if (rank(m) == n) return m;
  }
}

LinMap permutation_matrix(Field f, const std::vector<std::size_t>& perm) {
  LinMap m(f, perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = FieldElem(f, 1);
  return m;
}

HomBialgebra classical_group(std::size_t n, Field f) { return twisted_group(n, 1, f); }

HomBialgebra twisted_group(std::size_t n, std::size_t k, Field f) {
  GeneratedBialgebra g = gen_group_bialgebra(n, k, f);
  if (!g.report.pass())
    throw std::logic_error("group bialgebra fixture fails its check: n=" + std::to_string(n));
  return g.bialgebra;
}

QtFixture cyclic_qt(std::size_t n, std::uint64_t p, long omega, std::size_t k) {
  const Field f = Fp(p);
  const FieldElem w(f, omega);
  const FieldElem inv_n = FieldElem(f, 1) / FieldElem(f, static_cast<long>(n));
  Vec coeffs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      FieldElem c = inv_n;
      for (std::size_t e = 0; e < (a * b) % n; ++e) c *= w;
      coeffs.push_back(c);
    }
  return {"cyclic Z" + std::to_string(n) + "/F" + std::to_string(p) + " k=" + std::to_string(k),
          twisted_group(n, k, f), RMatrix{n, coeffs}};
}

std::vector<QtFixture> qt_pool() {
  std::vector<QtFixture> pool;
  for (std::uint64_t p : {0ull, 3ull, 5ull}) {
    const Field f = p ? Fp(p) : Q();
    auto [h, r] = gen_kz2_qt(f);
    pool.push_back({"kz2 over " + f.name(), h, r});
  }
  pool.push_back(cyclic_qt(3, 7, 2, 1));
  pool.push_back(cyclic_qt(3, 7, 2, 2));
  pool.push_back(cyclic_qt(4, 5, 2, 1));
  pool.push_back(cyclic_qt(4, 5, 2, 3));
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 2}, {4, 2}, {3, 3}}) {
    HomBialgebra h = twisted_group(n, k);
    pool.push_back({"zero R on Z" + std::to_string(n) + " k=" + std::to_string(k), h,
                    RMatrix{n, Vec(n * n, FieldElem(Q(), 0))}});
  }
  return pool;
}

RMatrix r_one_g(Field f) {
  const FieldElem z(f, 0), o(f, 1);
  return RMatrix{2, {z, o, z, z}};
}

std::vector<NamedModule> module_pool(const HomBialgebra& h, std::size_t random_count) {
  const Field f = h.field();
  std::vector<NamedModule> base;
  base.push_back({"regular", regular_module(h.algebra())});
  base.push_back({"zero(2)", zero_module(f, h.dim, random_matrix(f, 2, 2, -2, 2))});
  base.push_back({"zero(1)", zero_module(f, h.dim, LinMap::identity(f, 1))});
  std::vector<NamedModule> pool;
  for (auto& m : base)
    if (check_module(h, m.m).pass()) pool.push_back(m);
  const std::size_t seeds = pool.size();
  for (std::size_t i = 0; i < random_count; ++i) {
    const NamedModule& src = pool[i % seeds];
    HModule c = conjugate_module(src.m, random_invertible(f, src.m.dim));
    if (check_module(h, c).pass()) pool.push_back({src.name + " conj " + std::to_string(i), c});
  }
  return pool;
}

YDModule classical_z2_regular_yd() {
  for (const NamedYd& c : yd_candidates(2, 1))
    if (c.name == "triv-act/reg-coact") return c.m;
  throw std::logic_error("missing Z2 candidate");
}

std::vector<NamedYd> yd_candidates(std::size_t n, std::size_t k) {
  const Field f = Q();
  const FieldElem one(f, 1);
  const auto phi = [&](std::size_t i) { return (i * k) % n; };
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = phi(i);
  const LinMap a = permutation_matrix(f, perm);

  // Yau twist of a classical YD module M: h . m = phi(h > m), lambda o phi.
  const auto make = [&](bool regular_action, bool regular_coaction) {
    std::vector<LinMap> blocks;
    for (std::size_t h = 0; h < n; ++h) {
      LinMap b(f, n, n);
      for (std::size_t m = 0; m < n; ++m) b(phi(regular_action ? (h + m) % n : m), m) = one;
      blocks.push_back(b);
    }
    LinMap co(f, n * n, n);
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t deg = regular_coaction ? phi(m) : 0;
      co(flatten(deg, phi(m), n), m) = one;
    }
    const HModule mod = module_from_blocks(blocks, a);
    return YDModule{n, mod.action, co, a};
  };

  std::vector<NamedYd> out;
  out.push_back({"triv-act/reg-coact", make(false, true)});
  out.push_back({"reg-act/triv-coact", make(true, false)});
  out.push_back({"reg-act/reg-coact", make(true, true)});
  for (std::size_t deg = 0; deg < n; ++deg) {
    LinMap act(f, 1, n), co(f, n, 1);
    for (std::size_t h = 0; h < n; ++h) act(0, h) = one;
    co(deg, 0) = one;
    out.push_back({"1d degree " + std::to_string(deg), YDModule{1, act, co, LinMap::identity(f, 1)}});
  }
  return out;
}

YdFixture yd_fixture(std::size_t n, std::size_t k, bool add_conjugate) {
  YdFixture fx{"Z" + std::to_string(n) + " k=" + std::to_string(k), twisted_group(n, k), {}, {}};
  const YdBase base(fx.h);
  for (NamedYd& c : yd_candidates(n, k)) {
    if (check_yd(base, c.m).pass())
      fx.modules.push_back(std::move(c));
    else
      fx.rejected.push_back(c.name);
  }
  if (add_conjugate)
    for (const NamedYd& c : std::vector<NamedYd>(fx.modules)) {
      if (c.m.dim < 2) continue;
      YDModule conj = conjugate_yd(c.m, random_invertible(Q(), c.m.dim));
      if (check_yd(base, conj).pass()) fx.modules.push_back({c.name + " conj", conj});
      break;
    }
  return fx;
}

std::vector<YdFixture> yd_pool() {
  return {yd_fixture(2, 1, true), yd_fixture(3, 2, true), yd_fixture(4, 3, false),
          yd_fixture(5, 2, false)};
}

MonomialYbe random_monomial_ybe(Field f, std::size_t d) {
  std::uniform_int_distribution<int> dist(1, 4);
  std::bernoulli_distribution sign(0.5);
  const auto nonzero = [&] { return FieldElem(f, sign(rng()) ? dist(rng()) : -dist(rng())); };
  LinMap b(f, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) b(flatten(j, i, d), flatten(i, j, d)) = nonzero();
  Vec diag;
  for (std::size_t i = 0; i < d; ++i) diag.push_back(nonzero());
  return {b, LinMap::diagonal(diag)};
}

}  // namespace fixtures
