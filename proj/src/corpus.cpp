#include "toricmult/corpus.hpp"

#include <sstream>

namespace toricmult {

namespace {

void put_vector(std::ostringstream& os, const LatticeVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
}

}  // namespace

std::string describe(const Instance& in) {
  std::ostringstream os;
  os << "{\"rank\":" << in.x.rank() << ",\"rays\":[";
  for (std::size_t i = 0; i < in.x.rays().size(); ++i) {
    if (i) os << ',';
    put_vector(os, in.x.rays()[i]);
  }
  os << "],\"delta\":[";
  for (std::size_t i = 0; i < in.delta.coeffs.size(); ++i) os << (i ? "," : "") << '"' << to_string(in.delta.coeffs[i]) << '"';
  os << "],\"ideal\":[";
  for (std::size_t i = 0; i < in.a.exponents().size(); ++i) {
    if (i) os << ',';
    put_vector(os, in.a.exponents()[i]);
  }
  os << "],\"c\":\"" << to_string(in.c) << "\"}";
  return os.str();
}

namespace corpus {

Rational random_positive(Rng& rng, int hi, int max_den) {
  const int q = std::uniform_int_distribution<int>(1, max_den)(rng);
  const int p = std::uniform_int_distribution<int>(1, hi * q)(rng);
  return Rational(p, q);
}

Rational random_rational(Rng& rng, int lo, int hi, int max_den) {
  const int q = std::uniform_int_distribution<int>(1, max_den)(rng);
  const int p = std::uniform_int_distribution<int>(lo * q, hi * q)(rng);
  return Rational(p, q);
}

namespace {

LatticeVector random_primitive(Rng& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> e(-max_entry, max_entry);
  while (true) {
    LatticeVector v(n);
    for (auto& x : v) x = e(rng);
    if (!v.is_zero()) return primitive(v).first;
  }
}

}  // namespace

ToricVariety random_cone_2d(Rng& rng, int max_entry) { return random_simplicial(rng, 2, max_entry); }

ToricVariety random_simplicial(Rng& rng, std::size_t n, int max_entry) {
  while (true) {
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < n; ++i) rays.push_back(random_primitive(rng, n, max_entry));
    if (rank(rays) == n) return make_variety(rays);
  }
}

MonomialIdeal random_ideal(Rng& rng, const ToricVariety& x, int max_gens, int max_terms) {
  const auto& hb = x.dual_hilbert_basis().elements;
  std::uniform_int_distribution<std::size_t> pick(0, hb.size() - 1);
  const int gens = std::uniform_int_distribution<int>(1, max_gens)(rng);
  std::vector<LatticeVector> exps;
  for (int g = 0; g < gens; ++g) {
    LatticeVector e(x.rank());
    const int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
    // Zero terms would give the unit ideal; keep it rare.
    const int used = terms == 0 && std::uniform_int_distribution<int>(0, 9)(rng) != 0 ? 1 : terms;
    for (int t = 0; t < used; ++t) e += hb[pick(rng)];
    exps.push_back(e);
  }
  return make_ideal(x, exps);
}

MonomialIdeal random_smooth_ideal(Rng& rng, const ToricVariety& affine, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  const int gens = std::uniform_int_distribution<int>(1, 5)(rng);
  std::vector<LatticeVector> exps;
  for (int g = 0; g < gens; ++g) {
    LatticeVector v(affine.rank());
    for (auto& x : v) x = e(rng);
    exps.push_back(v);
  }
  return make_ideal(affine, exps);
}

ToricVariety affine_space(std::size_t n) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n);
    e[i] = 1;
    rays.push_back(e);
  }
  return make_variety(rays);
}

ToricVariety non_q_gorenstein_3d() {
  return make_variety({lattice_vector({0, 0, 1}), lattice_vector({1, 0, 1}), lattice_vector({0, 1, 1}),
                       lattice_vector({1, 1, -2})});
}

Instance resolution_instance(Rng& rng) {
  ToricVariety x = random_cone_2d(rng, 12);
  MonomialIdeal a = random_ideal(rng, x, 5, 3);
  Rational c = random_positive(rng, 3, 6);
  QDivisor delta;
  for (std::size_t i = 0; i < x.rays().size(); ++i) delta.coeffs.push_back(random_rational(rng, -2, 2, 4));
  return Instance{x, delta, a, c};
}

Instance q_gorenstein_instance(Rng& rng) {
  const std::size_t n = 2 + rng() % 2;
  ToricVariety x = random_simplicial(rng, n, n == 2 ? 6 : 2);
  MonomialIdeal a = random_ideal(rng, x, 4, 2);
  Rational c = random_positive(rng, 3, 6);
  return Instance{x, QDivisor{std::vector<Rational>(x.rays().size(), Rational(0))}, a, c};
}

Instance brute_instance(Rng& rng) {
  const int kind = static_cast<int>(rng() % 3);
  ToricVariety x = kind == 0 ? random_cone_2d(rng, 8) : random_simplicial(rng, 3, 2);
  if (kind == 2) {
    // Add a fourth generator; keep the result only if all four rays stay extremal.
    std::uniform_int_distribution<int> e(-2, 2);
    for (int attempt = 0; attempt < 20; ++attempt) {
      LatticeVector extra(3);
      for (auto& v : extra) v = e(rng);
      if (extra.is_zero()) continue;
      std::vector<LatticeVector> rays = x.rays();
      rays.push_back(primitive(extra).first);
      try {
        Cone c = Cone::generated_by(3, rays);
        if (c.rays().size() == 4 && c.is_full_dimensional()) {
          x = make_variety(c.rays());
          break;
        }
      } catch (const Error&) {
      }
    }
  }
  MonomialIdeal a = random_ideal(rng, x, 4, 2);
  RationalVector w(x.rank());
  for (auto& v : w) v = random_rational(rng, -2, 2, 3);
  QDivisor delta;
  for (const auto& v : x.rays()) delta.coeffs.push_back(1 - dot(v, w));
  return Instance{x, delta, a, random_positive(rng, 3, 6)};
}

Instance non_q_gorenstein_instance(Rng& rng) {
  ToricVariety x = non_q_gorenstein_3d();
  MonomialIdeal a = random_ideal(rng, x, 3, 2);
  return Instance{x, QDivisor{std::vector<Rational>(4, Rational(0))}, a, random_positive(rng, 2, 4)};
}

Instance howald_instance(Rng& rng) {
  ToricVariety x = affine_space(2 + rng() % 2);
  MonomialIdeal a = random_smooth_ideal(rng, x, 9);
  return Instance{x, QDivisor{std::vector<Rational>(x.rank(), Rational(0))}, a, Rational(0)};
}

}  // namespace corpus
}  // namespace toricmult
