#pragma once

// Affine toric varieties X_σ, torus-invariant Q-divisors and pairs (X, Δ).

#include <optional>
#include <utility>
#include <vector>

#include "toricmult/polyhedral.hpp"

namespace toricmult {

/// X_σ for a pointed full-dimensional cone σ in N. Immutable; the dual cone
/// and its Hilbert basis are computed once at construction.
class ToricVariety {
 public:
  std::size_t rank() const { return sigma_.rank(); }
  const Cone& sigma() const { return sigma_; }
  const std::vector<LatticeVector>& rays() const { return sigma_.rays(); }
  const Cone& sigma_dual() const { return sigma_dual_; }
  const HilbertBasis& dual_hilbert_basis() const { return dual_hb_; }
  /// Set when some input ray had to be divided by its coordinate gcd.
  bool primitivized() const { return primitivized_; }

 private:
  friend ToricVariety make_variety(const std::vector<LatticeVector>& rays);
  Cone sigma_;
  Cone sigma_dual_;
  HilbertBasis dual_hb_;
  bool primitivized_ = false;
};

/// Rays are primitivized, then must be distinct and extremal; ray order is kept.
ToricVariety make_variety(const std::vector<LatticeVector>& rays);

/// Σ coeffs[i] D_i, aligned with the variety's rays.
struct QDivisor {
  std::vector<Rational> coeffs;
  friend bool operator==(const QDivisor&, const QDivisor&) = default;
};

/// K_X = -Σ D_i.
QDivisor canonical_divisor(const ToricVariety& x);

/// Some w ∈ M_Q with (w, v_i) = d_i for all i, if d is Q-Cartier.
std::optional<RationalVector> q_cartier_witness(const ToricVariety& x, const QDivisor& d);

/// (X, Δ) together with w satisfying (w, v_i) = 1 - δ_i, i.e. K_X + Δ = -div x^w.
struct Pair {
  ToricVariety variety;
  QDivisor delta;
  RationalVector weight;
};

Pair make_pair(const ToricVariety& x, const QDivisor& delta);

/// w_0 with (w_0, v_i) = 1 for all i and the least r >= 1 with r w_0 ∈ M.
std::optional<std::pair<RationalVector, Integer>> q_gorenstein_weight(const ToricVariety& x);

/// Minimal generators of ω_X: lattice points with (m, v_i) > 0 for every ray.
std::vector<LatticeVector> omega_generators(const ToricVariety& x);

}  // namespace toricmult
