#include <random>

#include "doctest.h"
#include "toricmult/exact.hpp"

using namespace toricmult;

namespace {
LatticeVector lv(std::initializer_list<long> xs) { return lattice_vector(xs); }
Rational q(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("primitive factors out the coordinate gcd") {
  CHECK(primitive(lv({2, 4})) == std::make_pair(lv({1, 2}), Integer(2)));
  CHECK(primitive(lv({1, 0})) == std::make_pair(lv({1, 0}), Integer(1)));
  CHECK(primitive(lv({-6, 9, 3})) == std::make_pair(lv({-2, 3, 1}), Integer(3)));
  CHECK_THROWS_WITH_AS(primitive(lv({0, 0})), "zero vector has no primitive part", Error);
}

TEST_CASE("solve_linear") {
  SUBCASE("identity") {
    auto w = solve_linear({lv({1, 0}), lv({0, 1})}, {1, 1});
    REQUIRE(w);
    CHECK(*w == RationalVector{1, 1});
  }
  SUBCASE("2x2") {
    auto w = solve_linear({lv({1, 0}), lv({1, 2})}, {1, 1});
    REQUIRE(w);
    CHECK(*w == RationalVector{1, 0});
  }
  SUBCASE("inconsistent 4x3") {
    // w3 = 1, w1 = 0, w2 = 0 from the first three rows; the fourth then gives -2 != 1.
    auto w = solve_linear({lv({0, 0, 1}), lv({1, 0, 1}), lv({0, 1, 1}), lv({1, 1, -2})}, {1, 1, 1, 1});
    CHECK_FALSE(w);
  }
  SUBCASE("underdetermined sets free variables to zero") {
    auto w = solve_linear({lv({1, 1, 0})}, {3});
    REQUIRE(w);
    CHECK(*w == RationalVector{3, 0, 0});
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(solve_linear({lv({1, 0}), lv({1})}, {1, 1}), Error);
    CHECK_THROWS_AS(solve_linear({lv({1, 0})}, {1, 1}), Error);
  }
}

TEST_CASE("solve_linear re-substitution on random systems") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4), dim(1, 4), cnt(1, 5);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = dim(rng), m = cnt(rng);
    std::vector<LatticeVector> rows;
    std::vector<Rational> rhs;
    // Half the systems are consistent by construction.
    RationalVector planted(n);
    for (auto& x : planted) x = Rational(coef(rng), 1 + std::abs(coef(rng)));
    for (int i = 0; i < m; ++i) {
      LatticeVector r(n);
      for (auto& x : r) x = coef(rng);
      rows.push_back(r);
      rhs.push_back(iter % 2 ? dot(r, planted) : Rational(coef(rng), 3));
    }
    auto w = solve_linear(rows, rhs);
    if (iter % 2) REQUIRE(w);
    if (w)
      for (int i = 0; i < m; ++i) CHECK(dot(rows[i], *w) == rhs[i]);
  }
}

TEST_CASE("floor_strict_bound") {
  CHECK(floor_strict_bound(q("5/6")) == 1);
  CHECK(floor_strict_bound(q("-1")) == 0);
  CHECK(floor_strict_bound(q("-7/3")) == -2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    Integer t = floor_strict_bound(r);
    CHECK(Rational(t - 1) <= r);
    CHECK(r < Rational(t));
    if (denominator(r) == 1) CHECK(t == numerator(r) + 1);
  }
}

TEST_CASE("rational field round trips") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
  for (int i = 0; i < 500; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (a != 0) CHECK(a * (1 / a) == 1);
    CHECK(gcd(abs(numerator(a)), denominator(a)) == 1);
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("rank and determinant") {
  CHECK(rank({lv({1, 2}), lv({2, 4})}) == 1);
  CHECK(rank({lv({1, 0, 0}), lv({0, 0, 1}), lv({1, 0, 1})}) == 2);
  CHECK(determinant({lv({1, 0}), lv({1, 2})}) == 2);
  CHECK(determinant({lv({0, 1}), lv({1, 0})}) == -1);
  CHECK(determinant({lv({2, 0, 1}), lv({1, 3, 2}), lv({1, 1, 2})}) == 6);
}
