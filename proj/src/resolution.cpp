#include "toricmult/resolution.hpp"

#include <algorithm>

namespace toricmult {

namespace {

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

void require_rank2(const ToricVariety& x) {
  if (x.rank() != 2) throw Error("resolution oracle needs rank 2");
}

/// x, y with a x + b y = gcd(a, b) >= 0.
void ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1, r1 = t;
    t = x0 - q * x1, x0 = x1, x1 = t;
    t = y0 - q * y1, y0 = y1, y1 = t;
  }
  if (r0 < 0) x0 = -x0, y0 = -y0;
  x = x0, y = y0;
}

/// The lattice point p with det(u, p) = 1 and 0 < det(p, v) < det(u, v).
LatticeVector hj_ray(const LatticeVector& u, const LatticeVector& v) {
  // det(u, p) = u0 p1 - u1 p0; u is primitive so the gcd is 1.
  Integer s, t;
  ext_gcd(u[0], -u[1], s, t);  // u0 s - u1 t = 1
  LatticeVector p{t, s};
  const Integer d = det2(u, v);
  // Shifting p by k u keeps det(u, p) and changes det(p, v) by k d.
  Integer r = det2(p, v);
  Integer k = r / d;
  if (r - k * d <= 0) k -= 1;
  p -= k * u;
  return p;
}

void check_smooth(const Fan2D& f) {
  for (std::size_t j = 0; j + 1 < f.rays.size(); ++j)
    if (det2(f.rays[j], f.rays[j + 1]) != 1) throw Error("fan is not smooth");
}

std::vector<LatticeVector> sections(const ToricVariety& x, HalfspaceSystem h) {
  for (const auto& v : x.rays()) h.add(v, 0);
  return minimal_lattice_generators(h, x.sigma_dual(), x.dual_hilbert_basis());
}

}  // namespace

Fan2D log_resolution_2d(const ToricVariety& x, const MonomialIdeal& a) {
  require_rank2(x);
  require_same_variety(x, a);
  LatticeVector first = x.rays()[0], last = x.rays()[1];
  if (det2(first, last) < 0) std::swap(first, last);

  std::vector<LatticeVector> inner;
  for (const auto& f : a.newton().facets)
    if (!(f.normal == first) && !(f.normal == last)) inner.push_back(f.normal);
  std::sort(inner.begin(), inner.end(),
            [](const LatticeVector& p, const LatticeVector& q) { return det2(p, q) > 0; });

  Fan2D fan;
  fan.rays.push_back(first);
  fan.rays.insert(fan.rays.end(), inner.begin(), inner.end());
  fan.rays.push_back(last);

  // Split the pair with the largest determinant first; ties go to the earliest.
  while (true) {
    std::size_t best = 0;
    Integer best_det = 1;
    for (std::size_t j = 0; j + 1 < fan.rays.size(); ++j) {
      Integer d = det2(fan.rays[j], fan.rays[j + 1]);
      if (d <= 0) throw Error("log_resolution_2d: rays out of order");
      if (d > best_det) best_det = d, best = j;
    }
    if (best_det == 1) break;
    fan.rays.insert(fan.rays.begin() + best + 1, hj_ray(fan.rays[best], fan.rays[best + 1]));
  }
  return fan;
}

Fan2D refine(const Fan2D& f) {
  Fan2D out;
  for (std::size_t j = 0; j < f.rays.size(); ++j) {
    out.rays.push_back(f.rays[j]);
    if (j + 1 < f.rays.size()) out.rays.push_back(f.rays[j] + f.rays[j + 1]);
  }
  return out;
}

Integer ord_ideal_on_ray(const MonomialIdeal& a, const LatticeVector& u) {
  if (!a.variety().sigma().contains(u)) throw Error("ray " + to_string(u) + " is not in sigma");
  Integer best = dot(a.exponents().front(), u);
  for (const auto& e : a.exponents()) best = std::min(best, dot(e, u));
  return best;
}

std::vector<RayData> ray_data(const Fan2D& f, const MonomialIdeal& a, const RationalVector& w) {
  std::vector<RayData> out;
  for (const auto& u : f.rays) out.push_back({u, ord_ideal_on_ray(a, u), dot(u, w)});
  return out;
}

std::vector<LatticeVector> multiplier_ideal_via_resolution(const Pair& p, const MonomialIdeal& a,
                                                           const Rational& c, const std::optional<Fan2D>& fan) {
  require_rank2(p.variety);
  if (c <= 0) throw Error("c must be positive");
  const Fan2D f = fan ? *fan : log_resolution_2d(p.variety, a);
  check_smooth(f);
  HalfspaceSystem h(2);
  for (const auto& r : ray_data(f, a, p.weight)) h.add(r.u, Rational(1 + floor(c * r.a - r.w_pair)));
  return sections(p.variety, std::move(h));
}

std::vector<LatticeVector> multiplier_module_via_resolution(const ToricVariety& x, const MonomialIdeal& a,
                                                            const Rational& c, const std::optional<Fan2D>& fan) {
  require_rank2(x);
  if (c <= 0) throw Error("c must be positive");
  const Fan2D f = fan ? *fan : log_resolution_2d(x, a);
  check_smooth(f);
  HalfspaceSystem h(2);
  for (const auto& r : ray_data(f, a, RationalVector(2))) h.add(r.u, Rational(1 + floor(c * r.a)));
  return sections(x, std::move(h));
}

bool check_positivity_on_resolution(const ToricVariety& x, const LatticeVector& m, const Fan2D& f) {
  if (!x.sigma_dual().contains_in_interior(m)) throw Error("exponent " + to_string(m) + " is not in omega");
  for (const auto& u : f.rays)
    if (dot(m, u) <= 0) return false;
  return true;
}

}  // namespace toricmult
