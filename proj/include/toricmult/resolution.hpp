#pragma once

// Toric log resolutions of monomial ideals on surfaces, used to evaluate the
// multiplier ideal and module straight from their definitions.

#include <optional>
#include <vector>

#include "toricmult/multiplier.hpp"

namespace toricmult {

/// Smooth subdivision of a 2D cone: rays in counterclockwise order, first and
/// last are σ's rays, consecutive pairs have determinant 1.
struct Fan2D {
  std::vector<LatticeVector> rays;
};

/// Inserts the Newton facet normals, then Hirzebruch–Jung rays until smooth.
Fan2D log_resolution_2d(const ToricVariety& x, const MonomialIdeal& a);

/// One further subdivision: u_j + u_{j+1} between every pair of neighbours.
Fan2D refine(const Fan2D& f);

/// min over generators e of (e, u). u must lie in σ.
Integer ord_ideal_on_ray(const MonomialIdeal& a, const LatticeVector& u);

struct RayData {
  LatticeVector u;
  Integer a;       // order of the ideal along D_u
  Rational w_pair; // (w, u)
};

std::vector<RayData> ray_data(const Fan2D& f, const MonomialIdeal& a, const RationalVector& w);

/// Sections of K_Y - ⌊μ*(K_X+Δ) + cA⌋: (m, u_j) >= 1 + ⌊c a_j - (w, u_j)⌋, intersected with σ∨.
std::vector<LatticeVector> multiplier_ideal_via_resolution(const Pair& p, const MonomialIdeal& a,
                                                           const Rational& c,
                                                           const std::optional<Fan2D>& fan = std::nullopt);

/// Sections of K_Y - ⌊cA⌋: (m, u_j) >= 1 + ⌊c a_j⌋.
std::vector<LatticeVector> multiplier_module_via_resolution(const ToricVariety& x, const MonomialIdeal& a,
                                                            const Rational& c,
                                                            const std::optional<Fan2D>& fan = std::nullopt);

/// (m, u_j) > 0 on every ray of f. m must lie in the interior of σ∨.
bool check_positivity_on_resolution(const ToricVariety& x, const LatticeVector& m, const Fan2D& f);

}  // namespace toricmult
