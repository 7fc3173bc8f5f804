#pragma once

// Brute-force references that avoid the polyhedral machinery: no double
// description, no elimination, no generator engine.

#include <cstdint>
#include <functional>
#include <vector>

#include "toricmult/multiplier.hpp"

namespace toricmult::oracle {

/// J(a^c) on affine space by Howald's criterion m + (1,...,1) ∈ int(c·Newt(a)),
/// scanning the box [0, box]^n. Newt(a) facets come from naive enumeration of
/// hyperplanes through n points of E ∪ {e + unit vectors}.
std::vector<LatticeVector> howald_generators(const std::vector<LatticeVector>& exps, const Rational& c,
                                             int box = 30);

/// Minimal elements of the members of σ∨ ∩ M with grading degree <= degree,
/// membership decided by `member`. Domination is m - g ∈ σ∨, checked on σ's rays.
std::vector<LatticeVector> brute_minimal(const ToricVariety& x, const Integer& degree,
                                         const std::function<bool(const LatticeVector&)>& member);

/// Positive grading used by brute_minimal: the sum of σ's rays.
LatticeVector brute_grading(const ToricVariety& x);

}  // namespace toricmult::oracle
