#pragma once

#include <random>
#include <string>
#include <vector>

#include "homcat/dehomify.hpp"
#include "homcat/workbench.hpp"

namespace fixtures {

using namespace homcat;

inline Field Q() { return Field::rationals(); }
inline Field Fp(std::uint64_t p) { return Field::prime(p); }

// Fixed seed so every run sees the same random fixtures.
std::mt19937& rng();

LinMap random_matrix(Field f, std::size_t rows, std::size_t cols, int lo, int hi);
LinMap random_invertible(Field f, std::size_t n);
// Permutation matrix of e_i -> e_{perm[i]}.
LinMap permutation_matrix(Field f, const std::vector<std::size_t>& perm);

// The pure group bialgebra k[Z_n] with alpha = psi = id.
HomBialgebra classical_group(std::size_t n, Field f = {});
// gen_group_bialgebra(n, k), gated: throws if it fails its own check.
HomBialgebra twisted_group(std::size_t n, std::size_t k, Field f = {});

struct QtFixture {
  std::string name;
  HomBialgebra h;
  RMatrix r;
};
// R = (1/n) sum_{a,b} omega^{ab} g^a (x) g^b over F_p, with omega of order n,
// on k[Z_n] twisted by g -> g^k.
QtFixture cyclic_qt(std::size_t n, std::uint64_t p, long omega, std::size_t k);
// kz2 over Q, F_3, F_5; cyclic structures with inversion twists; R = 0 on
// twisted groups.
std::vector<QtFixture> qt_pool();
// R = 1 (x) g on k[Z_2].
RMatrix r_one_g(Field f = {});

struct NamedModule {
  std::string name;
  HModule m;
};
// Regular and zero modules plus `random_count` random conjugates of them, all
// gated by check_module.
std::vector<NamedModule> module_pool(const HomBialgebra& h, std::size_t random_count);

struct NamedYd {
  std::string name;
  YDModule m;
};
struct YdFixture {
  std::string name;
  HomBialgebra h;
  std::vector<NamedYd> modules;  // every entry passed check_yd
  std::vector<std::string> rejected;
};
// k[Z_2] over Q with the adjoint (here trivial) action and the regular coaction.
YDModule classical_z2_regular_yd();
// Candidate YD modules over twisted_group(n, k): Yau twists of classical
// k[Z_n]-YD modules by g -> g^k.
std::vector<NamedYd> yd_candidates(std::size_t n, std::size_t k);
YdFixture yd_fixture(std::size_t n, std::size_t k, bool add_conjugate);
// Classical Z_2 plus Yau-twisted Z_3 (k=2), Z_4 (k=3), Z_5 (k=2).
std::vector<YdFixture> yd_pool();

struct MonomialYbe {
  LinMap b;      // e_i (x) e_j -> q_ij e_j (x) e_i
  LinMap alpha;  // diagonal
};
MonomialYbe random_monomial_ybe(Field f, std::size_t d);

}  // namespace fixtures
