#include "toricmult/ideals.hpp"

#include <algorithm>

namespace toricmult {

namespace {

NewtonPolyhedron compute_newton(const ToricVariety& x, const std::vector<LatticeVector>& exps) {
  VertexSystem v{x.rank(), {}, x.sigma_dual().rays()};
  for (const auto& e : exps) v.vertices.push_back(to_rational(e));
  HalfspaceSystem h = vrep_to_hrep(v);

  NewtonPolyhedron np;
  for (const auto& r : h.rows) {
    auto [n, factor] = clear_denominators(r.normal);
    Integer b = dot(n, exps.front());
    for (const auto& e : exps) b = std::min(b, dot(n, e));
    if (Rational(b) != r.offset * factor) throw Error("newton_polyhedron: facet offset is not attained");
    np.facets.push_back({std::move(n), std::move(b)});
  }
  std::sort(np.facets.begin(), np.facets.end(),
            [](const NewtonFacet& a, const NewtonFacet& b) { return a.normal < b.normal; });

  // A generator is a vertex iff its tight facets span N_Q.
  for (const auto& e : exps) {
    std::vector<LatticeVector> tight;
    for (const auto& f : np.facets)
      if (dot(f.normal, e) == f.b) tight.push_back(f.normal);
    if (rank(tight) == x.rank()) np.vertices.push_back(e);
  }
  return np;
}

}  // namespace

MonomialIdeal make_ideal(const ToricVariety& x, const std::vector<LatticeVector>& exps) {
  if (exps.empty()) throw Error("zero ideal");
  for (const auto& e : exps) {
    if (e.size() != x.rank()) throw Error("exponent " + to_string(e) + " has the wrong length");
    if (!x.sigma_dual().contains(e)) throw Error("exponent " + to_string(e) + " is not in the dual cone");
  }
  std::vector<LatticeVector> sorted = exps;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  MonomialIdeal a;
  a.variety_ = x;
  for (const auto& e : sorted) {
    bool redundant = false;
    for (const auto& f : sorted)
      if (!(f == e) && x.sigma_dual().contains(e - f)) {
        redundant = true;
        break;
      }
    if (!redundant) a.exponents_.push_back(e);
  }
  a.newton_ = compute_newton(x, a.exponents_);
  return a;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) { return a.newton(); }

bool interior_contains(const NewtonPolyhedron& np, const Rational& c, const RationalVector& y) {
  if (c <= 0) throw Error("c must be positive");
  for (const auto& f : np.facets)
    if (!(dot(f.normal, y) > c * f.b)) return false;
  return true;
}

std::vector<LatticeVector> integral_closure(const MonomialIdeal& a) {
  const ToricVariety& x = a.variety();
  HalfspaceSystem h(x.rank());
  for (const auto& v : x.rays()) h.add(v, 0);
  for (const auto& f : a.newton().facets) h.add(f.normal, f.b);
  return minimal_lattice_generators(h, x.sigma_dual(), x.dual_hilbert_basis());
}

bool ideal_membership(const MonomialIdeal& a, const LatticeVector& m) {
  for (const auto& e : a.exponents())
    if (a.variety().sigma_dual().contains(m - e)) return true;
  return false;
}

}  // namespace toricmult
