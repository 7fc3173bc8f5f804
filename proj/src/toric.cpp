#include "toricmult/toric.hpp"

namespace toricmult {

ToricVariety make_variety(const std::vector<LatticeVector>& rays) {
  if (rays.empty()) throw Error("torus factor not supported");
  const std::size_t n = rays.front().size();
  ToricVariety x;
  std::vector<LatticeVector> prim;
  for (const auto& r : rays) {
    if (r.size() != n) throw Error("ray " + to_string(r) + " has the wrong length");
    if (r.is_zero()) throw Error("zero ray");
    auto [p, g] = primitive(r);
    if (g != 1) x.primitivized_ = true;
    prim.push_back(std::move(p));
  }
  x.sigma_ = Cone(n, std::move(prim));
  if (!x.sigma_.is_full_dimensional()) throw Error("torus factor not supported");
  x.sigma_dual_ = dual_cone(x.sigma_);
  x.dual_hb_ = hilbert_basis(x.sigma_dual_);
  return x;
}

QDivisor canonical_divisor(const ToricVariety& x) {
  return QDivisor{std::vector<Rational>(x.rays().size(), Rational(-1))};
}

std::optional<RationalVector> q_cartier_witness(const ToricVariety& x, const QDivisor& d) {
  if (d.coeffs.size() != x.rays().size()) throw Error("divisor has the wrong number of coefficients");
  return solve_linear(x.rays(), d.coeffs);
}

Pair make_pair(const ToricVariety& x, const QDivisor& delta) {
  if (delta.coeffs.size() != x.rays().size()) throw Error("divisor has the wrong number of coefficients");
  QDivisor target;
  for (const auto& d : delta.coeffs) target.coeffs.push_back(1 - d);
  auto w = q_cartier_witness(x, target);
  if (!w) throw Error("K_X+Δ is not ℚ-Cartier");
  return Pair{x, delta, *w};
}

std::optional<std::pair<RationalVector, Integer>> q_gorenstein_weight(const ToricVariety& x) {
  auto w = q_cartier_witness(x, QDivisor{std::vector<Rational>(x.rays().size(), Rational(1))});
  if (!w) return std::nullopt;
  Integer r = 1;
  for (const auto& c : *w) r = lcm(r, Integer(denominator(c)));
  return std::make_pair(*w, r);
}

std::vector<LatticeVector> omega_generators(const ToricVariety& x) {
  HalfspaceSystem h(x.rank());
  for (const auto& v : x.rays()) h.add(v, 0, true);
  return minimal_lattice_generators(strict_to_lattice_closed(h), x.sigma_dual(), x.dual_hilbert_basis());
}

}  // namespace toricmult
