#include <random>
#include <set>

#include "doctest.h"
#include "toricmult/corpus.hpp"
#include "toricmult/multiplier.hpp"
#include "toricmult/oracles.hpp"

using namespace toricmult;

namespace {
LatticeVector lv(std::initializer_list<long> xs) { return lattice_vector(xs); }
Rational q(const char* s) { return parse_rational(s); }
using Gens = std::vector<LatticeVector>;

const ToricVariety& plane() {
  static const ToricVariety x = corpus::affine_space(2);
  return x;
}
const ToricVariety& quadric() {
  static const ToricVariety x = make_variety({lv({1, 0}), lv({1, 2})});
  return x;
}
Pair trivial_pair(const ToricVariety& x) {
  return make_pair(x, QDivisor{std::vector<Rational>(x.rays().size(), Rational(0))});
}

MonomialIdeal cusp() { return make_ideal(plane(), {lv({2, 0}), lv({0, 3})}); }
MonomialIdeal quadric_max() { return make_ideal(quadric(), {lv({0, 1}), lv({1, 0}), lv({2, -1})}); }

bool member_of(const Gens& gens, const ToricVariety& x, const LatticeVector& m) {
  for (const auto& g : gens)
    if (x.sigma_dual().contains(m - g)) return true;
  return false;
}

struct Case {
  Pair p;
  MonomialIdeal a;
  Rational c;
};

std::vector<Case> random_cases(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  for (int i = 0; i < count; ++i) {
    ToricVariety x = i % 3 == 2 ? corpus::random_simplicial(rng, 3, 2) : corpus::random_cone_2d(rng, 6);
    MonomialIdeal a = corpus::random_ideal(rng, x, 4, 3);
    QDivisor d;
    for (std::size_t j = 0; j < x.rays().size(); ++j) d.coeffs.push_back(corpus::random_rational(rng, -1, 1, 3));
    out.push_back({make_pair(x, d), a, corpus::random_positive(rng, 3, 6)});
  }
  return out;
}
}  // namespace

TEST_CASE("multiplier_ideal_membership examples") {
  Pair p = trivial_pair(plane());
  CHECK_FALSE(multiplier_ideal_membership(p, cusp(), q("5/6"), lv({0, 0})));
  CHECK(multiplier_ideal_membership(p, cusp(), q("5/6"), lv({1, 0})));
  CHECK(multiplier_ideal_membership(trivial_pair(quadric()), quadric_max(), 1, lv({2, -1})));
  CHECK_THROWS_AS(multiplier_ideal_membership(p, cusp(), q("5/6"), lv({-1, 0})), Error);
  CHECK_THROWS_AS(multiplier_ideal_membership(p, cusp(), 0, lv({1, 0})), Error);
}

TEST_CASE("multiplier_ideal examples") {
  Pair p = trivial_pair(plane());
  CHECK(multiplier_ideal(p, cusp(), q("5/6")).generators == Gens{lv({0, 1}), lv({1, 0})});
  CHECK(multiplier_ideal(p, cusp(), q("1/2")).generators == Gens{lv({0, 0})});
  auto r = multiplier_ideal(trivial_pair(quadric()), quadric_max(), 1);
  CHECK(r.generators == Gens{lv({0, 1}), lv({1, 0}), lv({2, -1})});
  CHECK(r.weight_used == RationalVector{1, 0});
  CHECK(r.c == 1);
  CHECK_FALSE(r.defining_system.contains(lv({0, 0})));
  CHECK_THROWS_AS(multiplier_ideal(p, quadric_max(), 1), Error);
}

TEST_CASE("multiplier_module examples") {
  auto unit = make_ideal(plane(), {lv({0, 0})});
  CHECK(multiplier_module(plane(), unit, 1).generators == Gens{lv({1, 1})});
  CHECK(multiplier_module(plane(), cusp(), q("5/6")).generators == Gens{lv({1, 2}), lv({2, 1})});
  CHECK(multiplier_module(quadric(), make_ideal(quadric(), {lv({0, 0})}), 1).generators == Gens{lv({1, 0})});
  CHECK(multiplier_module(quadric(), make_ideal(quadric(), {lv({0, 0})}), 1).generators == omega_generators(quadric()));
}

TEST_CASE("lct examples") {
  CHECK(lct(trivial_pair(plane()), cusp()) == Threshold{false, q("5/6")});
  CHECK(lct(trivial_pair(plane()), make_ideal(plane(), {lv({1, 0}), lv({0, 1})})) == Threshold{false, 2});
  CHECK(lct(trivial_pair(quadric()), quadric_max()) == Threshold{false, 1});
  CHECK(lct(trivial_pair(plane()), make_ideal(plane(), {lv({0, 0})})).infinite);
  // Boundary coefficient 1 along D_1: (w, e_1) = 0 on the b = 0 facet x >= 0.
  CHECK(lct(make_pair(plane(), QDivisor{{1, 0}}), cusp()) == Threshold{false, 0});
}

TEST_CASE("lct is the supremum of c with the unit ideal") {
  for (const auto& k : random_cases(51, 40)) {
    Threshold t = lct(k.p, k.a);
    if (t.infinite) {
      CHECK(multiplier_ideal_membership(k.p, k.a, 100, LatticeVector(k.p.variety.rank())));
      continue;
    }
    const LatticeVector zero(k.p.variety.rank());
    if (t.value > 0) {
      CHECK(multiplier_ideal_membership(k.p, k.a, t.value * q("999/1000"), zero));
      CHECK_FALSE(multiplier_ideal_membership(k.p, k.a, t.value, zero));
    } else {
      CHECK_FALSE(multiplier_ideal_membership(k.p, k.a, q("1/1000"), zero));
    }
  }
}

TEST_CASE("jumping_numbers examples") {
  SUBCASE("cusp") {
    auto rep = jumping_numbers(trivial_pair(plane()), cusp(), 1);
    REQUIRE(rep.jumps.size() == 1);
    CHECK(rep.jumps[0].xi == q("5/6"));
    CHECK(rep.jumps[0].generators == Gens{lv({0, 1}), lv({1, 0})});
    CHECK(std::find(rep.candidates.begin(), rep.candidates.end(), Rational(1)) != rep.candidates.end());
    CHECK(rep.initial == Gens{lv({0, 0})});
  }
  SUBCASE("maximal ideal") {
    auto rep = jumping_numbers(trivial_pair(plane()), make_ideal(plane(), {lv({1, 0}), lv({0, 1})}), 2);
    REQUIRE(rep.jumps.size() == 1);
    CHECK(rep.jumps[0].xi == 2);
  }
  SUBCASE("unit ideal") {
    auto rep = jumping_numbers(trivial_pair(plane()), make_ideal(plane(), {lv({0, 0})}), 3);
    CHECK(rep.jumps.empty());
    CHECK(rep.candidates.empty());
  }
  CHECK_THROWS_AS(jumping_numbers(trivial_pair(plane()), cusp(), 0), Error);
}

TEST_CASE("jumps strictly decrease the ideal and the first jump is the lct") {
  for (const auto& k : random_cases(53, 20)) {
    auto rep = jumping_numbers(k.p, k.a, 2);
    Gens prev = rep.initial;
    for (const auto& j : rep.jumps) {
      CHECK(j.generators != prev);
      for (const auto& g : j.generators) CHECK(member_of(prev, k.p.variety, g));
      prev = j.generators;
    }
    Threshold t = lct(k.p, k.a);
    if (!rep.jumps.empty() && !t.infinite && t.value > 0) CHECK(rep.jumps.front().xi == t.value);
  }
}

TEST_CASE("engine output equals brute-force minimal members") {
  for (const auto& k : random_cases(57, 45)) {
    const ToricVariety& x = k.p.variety;
    auto gens = multiplier_ideal(k.p, k.a, k.c).generators;
    const LatticeVector grading = oracle::brute_grading(x);
    Integer deg = 0;
    for (const auto& g : gens) deg = std::max(deg, dot(grading, g));
    for (const auto& h : x.dual_hilbert_basis().elements) deg = std::max(deg, dot(grading, h));
    auto brute = oracle::brute_minimal(x, 2 * deg, [&](const LatticeVector& m) {
      return multiplier_ideal_membership(k.p, k.a, k.c, m);
    });
    CHECK(brute == gens);
  }
}

TEST_CASE("Howald formula on affine space") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + i % 2;
    ToricVariety x = corpus::affine_space(n);
    MonomialIdeal a = corpus::random_smooth_ideal(rng, x, 6);
    Rational c = corpus::random_positive(rng, 2, 4);
    CHECK(multiplier_ideal(trivial_pair(x), a, c).generators == oracle::howald_generators(a.exponents(), c, 20));
  }
}

TEST_CASE("monotonicity, up-set closure and right-continuity") {
  std::mt19937_64 rng(67);
  for (const auto& k : random_cases(71, 30)) {
    const ToricVariety& x = k.p.variety;
    Rational c2 = k.c + corpus::random_positive(rng, 1, 4);
    auto lo = multiplier_ideal(k.p, k.a, k.c).generators;
    auto hi = multiplier_ideal(k.p, k.a, c2).generators;
    for (const auto& g : hi) CHECK(multiplier_ideal_membership(k.p, k.a, k.c, g));
    auto mlo = multiplier_module(x, k.a, k.c).generators;
    for (const auto& g : multiplier_module(x, k.a, c2).generators) CHECK(member_of(mlo, x, g));
    for (const auto& g : lo)
      for (const auto& h : x.dual_hilbert_basis().elements) CHECK(multiplier_ideal_membership(k.p, k.a, k.c, g + h));

    // Off candidates the ideal is locally constant to the right.
    auto rep = jumping_numbers(k.p, k.a, k.c + 1);
    Rational c = k.c;
    if (std::find(rep.candidates.begin(), rep.candidates.end(), c) != rep.candidates.end()) continue;
    Rational next = k.c + 1;
    for (const auto& cand : rep.candidates)
      if (cand > c) {
        next = cand;
        break;
      }
    CHECK(multiplier_ideal(k.p, k.a, c + (next - c) / 2).generators == lo);
  }
}

TEST_CASE("scaling law J(a^{kc}) = J((a^k)^c)") {
  for (const auto& k : random_cases(73, 25)) {
    for (int e : {2, 3}) {
      std::vector<LatticeVector> cur{LatticeVector(k.p.variety.rank())};
      for (int i = 0; i < e; ++i) {
        std::vector<LatticeVector> next;
        for (const auto& s : cur)
          for (const auto& g : k.a.exponents()) next.push_back(s + g);
        cur = make_ideal(k.p.variety, next).exponents();
      }
      MonomialIdeal ak = make_ideal(k.p.variety, cur);
      CHECK(multiplier_ideal(k.p, k.a, e * k.c).generators == multiplier_ideal(k.p, ak, k.c).generators);
    }
  }
}

TEST_CASE("smooth case: J_omega(a^c) = J(a^c) * omega") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + i % 2;
    ToricVariety x = corpus::affine_space(n);
    MonomialIdeal a = corpus::random_smooth_ideal(rng, x, 5);
    Rational c = corpus::random_positive(rng, 3, 5);
    LatticeVector ones(n);
    for (auto& v : ones) v = 1;
    std::vector<LatticeVector> product;
    for (const auto& g : multiplier_ideal(trivial_pair(x), a, c).generators) product.push_back(g + ones);
    CHECK(multiplier_module(x, a, c).generators == make_ideal(x, product).exponents());
  }
}
