#include "toricmult/test_ideal.hpp"

#include <random>

namespace toricmult {

namespace {

void require_positive(const Rational& c) {
  if (c <= 0) throw Error("c must be positive");
}

bool valid_witness(const ToricVariety& x, const MonomialIdeal& a, const Rational& c, const LatticeVector& m,
                   const RationalVector& w) {
  for (const auto& v : x.rays())
    if (dot(v, w) > 1) return false;
  return interior_contains(a.newton(), c, to_rational(m) + w);
}

}  // namespace

TestMembershipWitness test_ideal_membership(const ToricVariety& x, const MonomialIdeal& a, const Rational& c,
                                            const LatticeVector& m) {
  require_positive(c);
  require_same_variety(x, a);
  if (!x.sigma_dual().contains(m)) throw Error("exponent " + to_string(m) + " is not in the dual cone");
  HalfspaceSystem h(x.rank());
  for (const auto& v : x.rays()) h.add(-v, -1);
  for (const auto& f : a.newton().facets) h.add(f.normal, c * f.b - dot(f.normal, m), true);

  TestMembershipWitness out;
  auto w = back_substitute(elimination_stages(h, x.rank()));
  if (!w) return out;
  if (!valid_witness(x, a, c, m, *w)) throw Error("test_ideal_membership: witness fails re-substitution");
  out.member = true;
  out.witness = std::move(w);
  return out;
}

IdealResult test_ideal(const ToricVariety& x, const MonomialIdeal& a, const Rational& c) {
  require_positive(c);
  require_same_variety(x, a);
  const std::size_t n = x.rank();
  // Variables (m_0..m_{n-1}, w_0..w_{n-1}).
  HalfspaceSystem h(2 * n);
  auto lift = [n](const LatticeVector& u, bool on_m, bool on_w) {
    LatticeVector row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (on_m) row[i] = u[i];
      if (on_w) row[n + i] = u[i];
    }
    return row;
  };
  for (const auto& v : x.rays()) {
    h.add(lift(v, true, false), 0);
    h.add(lift(-v, false, true), -1);
  }
  for (const auto& f : a.newton().facets) h.add(lift(f.normal, true, true), c * f.b, true);

  std::vector<std::size_t> drop;
  for (std::size_t i = n; i < 2 * n; ++i) drop.push_back(i);
  HalfspaceSystem proj = eliminate(h, drop);

  IdealResult r{{}, strict_to_lattice_closed(proj), c, RationalVector(n)};
  r.generators = minimal_lattice_generators(r.defining_system, x.sigma_dual(), x.dual_hilbert_basis());
  return r;
}

BoundaryDivisor boundary_divisor_for(const ToricVariety& x, const RationalVector& w) {
  if (w.size() != x.rank()) throw Error("weight has the wrong length");
  BoundaryDivisor d;
  for (const auto& v : x.rays()) {
    Rational delta = 1 - dot(v, w);
    if (delta < 0) throw Error("Δ not effective");
    d.delta.coeffs.push_back(delta);
  }
  d.weight = w;
  return d;
}

CorollaryReport corollary_check(const ToricVariety& x, const MonomialIdeal& a, const Rational& c,
                                std::size_t samples, std::uint64_t seed) {
  require_positive(c);
  require_same_variety(x, a);
  CorollaryReport rep;
  auto fail = [&rep](std::string s) {
    rep.pass = false;
    rep.counterexamples.push_back(std::move(s));
  };

  IdealResult tau = test_ideal(x, a, c);
  rep.tau_generators = tau.generators.size();
  for (const auto& g : tau.generators) {
    auto t = test_ideal_membership(x, a, c, g);
    if (!t.member) {
      fail("tau generator " + to_string(g) + " has no witness");
      continue;
    }
    BoundaryDivisor bd = boundary_divisor_for(x, *t.witness);
    Pair p = make_pair(x, bd.delta);
    if (!multiplier_ideal_membership(p, a, c, g))
      fail("tau generator " + to_string(g) + " not in J for w = " + to_string(*t.witness));
  }

  // Random rational w, pushed into {(w, v_i) <= 1} along an interior direction u of σ∨.
  LatticeVector u(x.rank());
  for (const auto& r : x.sigma_dual().rays()) u += r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector w(x.rank());
    for (auto& coord : w) coord = Rational(num(rng), den(rng));
    Rational top = dot(x.rays().front(), w);
    for (const auto& v : x.rays()) top = std::max(top, dot(v, w));
    if (top > 1) w -= (top - 1) * to_rational(u);  // (u, v_i) >= 1

    BoundaryDivisor bd = boundary_divisor_for(x, w);
    Pair p = make_pair(x, bd.delta);
    ++rep.samples;
    for (const auto& g : multiplier_ideal(p, a, c).generators) {
      ++rep.sampled_generators;
      if (!test_ideal_membership(x, a, c, g).member)
        fail("J generator " + to_string(g) + " for w = " + to_string(w) + " not in tau");
    }
  }
  return rep;
}

}  // namespace toricmult
