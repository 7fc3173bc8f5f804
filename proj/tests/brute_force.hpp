#pragma once

// Brute-force oracles used only by tests. Nothing here calls into the
// double description, elimination or generator-engine code paths.

#include <functional>
#include <vector>

#include "toricmult/exact.hpp"

namespace brute {

using toricmult::Integer;
using toricmult::LatticeVector;

/// m ∈ σ∨ straight from the definition: (m, v) >= 0 for every ray v of σ.
inline bool in_dual(const std::vector<LatticeVector>& sigma_rays, const LatticeVector& m) {
  for (const auto& v : sigma_rays)
    if (toricmult::dot(m, v) < 0) return false;
  return true;
}

/// All lattice points of the box [lo, hi] satisfying pred, lexicographic order.
inline std::vector<LatticeVector> box_points(const LatticeVector& lo, const LatticeVector& hi,
                                             const std::function<bool(const LatticeVector&)>& pred) {
  const std::size_t n = lo.size();
  std::vector<LatticeVector> out;
  LatticeVector x = lo;
  while (true) {
    if (pred(x)) out.push_back(x);
    std::size_t k = n;
    while (k-- > 0) {
      if (x[k] < hi[k]) {
        x[k] += 1;
        break;
      }
      x[k] = lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

/// Elements of pts not dominating another element, where g lies below m iff
/// m - g ∈ σ∨ (checked on σ's rays). Points are visited in increasing degree,
/// so comparing against the minimal elements found so far suffices.
inline std::vector<LatticeVector> minimal_elements(std::vector<LatticeVector> pts,
                                                   const std::vector<LatticeVector>& sigma_rays) {
  LatticeVector grading(sigma_rays.front().size());
  for (const auto& v : sigma_rays) grading += v;
  std::stable_sort(pts.begin(), pts.end(), [&](const LatticeVector& a, const LatticeVector& b) {
    return toricmult::dot(grading, a) < toricmult::dot(grading, b);
  });
  std::vector<LatticeVector> out;
  for (const auto& m : pts) {
    bool minimal = true;
    for (const auto& g : out)
      if (in_dual(sigma_rays, m - g)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Box containing every m ∈ σ∨ with (grading, m) <= degree, from the dual rays.
inline std::pair<LatticeVector, LatticeVector> degree_box(const std::vector<LatticeVector>& dual_rays,
                                                          const LatticeVector& grading,
                                                          const Integer& degree) {
  const std::size_t n = grading.size();
  LatticeVector lo(n), hi(n);
  for (const auto& r : dual_rays) {
    const Integer d = toricmult::dot(grading, r);
    for (std::size_t k = 0; k < n; ++k) {
      // degree * r_k / d rounded outward
      Integer num = degree * r[k];
      Integer fl = num / d, ce = num / d;
      if (num < 0 && fl * d != num) fl -= 1;
      if (num > 0 && ce * d != num) ce += 1;
      if (fl < lo[k]) lo[k] = fl;
      if (ce > hi[k]) hi[k] = ce;
    }
  }
  return {lo, hi};
}

}  // namespace brute
