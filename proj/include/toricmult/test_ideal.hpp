#pragma once

// Test ideals of monomial ideals on toric varieties and the decomposition
// τ(a^c) = Σ_Δ J((X,Δ), a^c) over effective Δ with K_X + Δ Q-Cartier.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricmult/multiplier.hpp"

namespace toricmult {

struct TestMembershipWitness {
  bool member = false;
  std::optional<RationalVector> witness;  // (w, v_i) <= 1 and m + w interior to c·Newt(a)
};

/// Decides whether some rational w has (w, v_i) <= 1 for all i and m + w in
/// the interior of c·Newt(a). m must lie in σ∨.
TestMembershipWitness test_ideal_membership(const ToricVariety& x, const MonomialIdeal& a, const Rational& c,
                                            const LatticeVector& m);

/// Projects the joint (m, w) system onto m and lists minimal generators.
IdealResult test_ideal(const ToricVariety& x, const MonomialIdeal& a, const Rational& c);

struct BoundaryDivisor {
  QDivisor delta;
  RationalVector weight;
};

/// Δ = Σ (1 - (w, v_i)) D_i; requires every (w, v_i) <= 1.
BoundaryDivisor boundary_divisor_for(const ToricVariety& x, const RationalVector& w);

struct CorollaryReport {
  bool pass = true;
  std::size_t tau_generators = 0;
  std::size_t samples = 0;
  std::size_t sampled_generators = 0;
  std::vector<std::string> counterexamples;
};

/// Both inclusions of τ(a^c) = Σ J((X,Δ), a^c): each τ generator against the
/// pair built from its own witness, then `samples` random effective boundaries
/// drawn from `seed`.
CorollaryReport corollary_check(const ToricVariety& x, const MonomialIdeal& a, const Rational& c,
                                std::size_t samples, std::uint64_t seed);

}  // namespace toricmult
