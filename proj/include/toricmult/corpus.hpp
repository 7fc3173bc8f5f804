#pragma once

// Seeded random instances. A (seed, index) pair always reproduces the same instance.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toricmult/ideals.hpp"

namespace toricmult {

struct Instance {
  ToricVariety x;
  QDivisor delta;  // ray-aligned; all zero when the instance has no boundary
  MonomialIdeal a;
  Rational c;
};

/// One-line description in problem-file syntax (JSON).
std::string describe(const Instance& in);

namespace corpus {

using Rng = std::mt19937_64;

/// p/q with 0 < p/q <= hi and q <= max_den.
Rational random_positive(Rng& rng, int hi, int max_den);

/// p/q in [lo, hi] with q <= max_den.
Rational random_rational(Rng& rng, int lo, int hi, int max_den);

/// Pointed full-dimensional 2D cone with ray entries in [-max_entry, max_entry].
ToricVariety random_cone_2d(Rng& rng, int max_entry);

/// Simplicial cone of rank n from n independent primitive rays.
ToricVariety random_simplicial(Rng& rng, std::size_t n, int max_entry);

/// 1..max_gens generators, each a sum of 1..max_terms dual Hilbert basis elements
/// (the empty sum, i.e. the unit ideal, is allowed with small probability).
MonomialIdeal random_ideal(Rng& rng, const ToricVariety& x, int max_gens, int max_terms);

/// 1..5 generators with entries in [0, max_exp] on the affine space of rank n.
MonomialIdeal random_smooth_ideal(Rng& rng, const ToricVariety& affine, int max_exp);

ToricVariety affine_space(std::size_t n);

/// Rays (0,0,1), (1,0,1), (0,1,1), (1,1,-2): pointed, four extremal rays, not Q-Gorenstein.
ToricVariety non_q_gorenstein_3d();

/// Instance for the 2D resolution comparison: random cone, ideal, c in (0,3], Δ in [-2,2].
Instance resolution_instance(Rng& rng);

/// Random simplicial 2D or 3D instance with Δ = 0.
Instance q_gorenstein_instance(Rng& rng);

/// 2D or 3D cone (3D possibly with four rays) and a Q-Cartier Δ built from a random weight.
Instance brute_instance(Rng& rng);

/// The non-Q-Gorenstein 3D cone with a random ideal; Δ = 0 (K_X is not Q-Cartier there).
Instance non_q_gorenstein_instance(Rng& rng);

/// Ideal with 1..5 generators, entries in [0, 9], on the affine plane or 3-space; c unset (0).
Instance howald_instance(Rng& rng);

}  // namespace corpus
}  // namespace toricmult
