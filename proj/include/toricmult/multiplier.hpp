#pragma once

// Multiplier ideals of pairs, multiplier modules, lct and jumping numbers.

#include <vector>

#include "toricmult/ideals.hpp"

namespace toricmult {

struct IdealResult {
  std::vector<LatticeVector> generators;
  HalfspaceSystem defining_system;  // closed, lattice points = the ideal's exponents
  Rational c;
  RationalVector weight_used;
};

/// x^m ∈ J((X,Δ), a^c) iff m + w lies in the interior of c·Newt(a). m must lie in σ∨.
bool multiplier_ideal_membership(const Pair& p, const MonomialIdeal& a, const Rational& c,
                                 const LatticeVector& m);

IdealResult multiplier_ideal(const Pair& p, const MonomialIdeal& a, const Rational& c);

/// J_ω(a^c): exponents in the interior of c·Newt(a). Always inside ω_X.
IdealResult multiplier_module(const ToricVariety& x, const MonomialIdeal& a, const Rational& c);

/// lct is either a nonnegative rational or +infinity (unit ideal).
struct Threshold {
  bool infinite = false;
  Rational value;
  friend bool operator==(const Threshold&, const Threshold&) = default;
};

Threshold lct(const Pair& p, const MonomialIdeal& a);

struct Jump {
  Rational xi;
  std::vector<LatticeVector> generators;  // J at xi
};

struct JumpReport {
  std::vector<Jump> jumps;
  Rational c_max;
  std::vector<LatticeVector> initial;  // J for c below the first candidate
  std::vector<Rational> candidates;
};

/// Candidate values are (z + (n_f, w)) / b_f in (0, c_max]; each is compared
/// against the ideal halfway to the previous candidate.
JumpReport jumping_numbers(const Pair& p, const MonomialIdeal& a, const Rational& c_max);

/// Throws unless the ideal lives on the pair's variety.
void require_same_variety(const ToricVariety& x, const MonomialIdeal& a);

}  // namespace toricmult
