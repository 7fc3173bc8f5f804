#include <algorithm>

#include "toricmult/double_description.hpp"
#include "toricmult/polyhedral.hpp"

namespace toricmult {

namespace {

bool is_extremal(const LatticeVector& r, const std::vector<LatticeVector>& facets,
                 const std::vector<LatticeVector>& equations, std::size_t n) {
  std::vector<LatticeVector> tight = equations;
  for (const auto& f : facets)
    if (dot(f, r) == 0) tight.push_back(f);
  return rank(tight) + 1 == n;
}

bool dual_is_full_dimensional(const ConeGenerators& dual, std::size_t n) {
  std::vector<LatticeVector> all = dual.lineality;
  all.insert(all.end(), dual.rays.begin(), dual.rays.end());
  return rank(all) == n;
}

}  // namespace

Cone::Cone(std::size_t rank, std::vector<LatticeVector> rays) : rank_(rank), rays_(std::move(rays)) {
  if (rank_ == 0) throw Error("cone of rank 0");
  for (const auto& r : rays_) {
    if (r.size() != rank_) throw Error("ray " + to_string(r) + " has the wrong length");
    if (r.is_zero()) throw Error("zero ray");
    if (!is_primitive(r)) throw Error("ray " + to_string(r) + " is not primitive");
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = i + 1; j < rays_.size(); ++j)
      if (rays_[i] == rays_[j]) throw Error("duplicate ray " + to_string(rays_[i]));

  auto dual = cone_from_inequalities(rank_, rays_);
  if (!dual_is_full_dimensional(dual, rank_)) throw Error("cone contains a line");
  facets_ = std::move(dual.rays);
  equations_ = std::move(dual.lineality);
  for (const auto& r : rays_)
    if (!is_extremal(r, facets_, equations_, rank_))
      throw Error("ray " + to_string(r) + " is not extremal");
}

Cone Cone::generated_by(std::size_t rank, const std::vector<LatticeVector>& gens) {
  std::vector<LatticeVector> prim;
  for (const auto& g : gens) {
    if (g.size() != rank) throw Error("generator " + to_string(g) + " has the wrong length");
    if (g.is_zero()) continue;
    prim.push_back(primitive(g).first);
  }
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
  auto dual = cone_from_inequalities(rank, prim);
  if (!dual_is_full_dimensional(dual, rank)) throw Error("cone contains a line");
  std::vector<LatticeVector> extremal;
  for (const auto& r : prim)
    if (is_extremal(r, dual.rays, dual.lineality, rank)) extremal.push_back(r);
  return Cone(rank, std::move(extremal));
}

bool Cone::contains(const LatticeVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains(const RationalVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains_in_interior(const LatticeVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

bool same_ray_set(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) return false;
  auto ra = a.rays(), rb = b.rays();
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

bool operator==(const Cone& a, const Cone& b) { return same_ray_set(a, b); }

Cone dual_cone(const Cone& c) {
  if (!c.is_full_dimensional()) throw Error("dual of a lower-dimensional cone contains a line");
  return Cone(c.rank(), c.facet_normals());
}

std::vector<LatticeVector> cone_facets(const Cone& c) {
  if (!c.is_full_dimensional()) throw Error("facets requested for a lower-dimensional cone");
  return c.facet_normals();
}

LatticeVector positive_grading(const Cone& c) {
  if (!c.is_full_dimensional()) throw Error("grading requested for a lower-dimensional cone");
  LatticeVector g(c.rank());
  for (const auto& f : c.facet_normals()) g += f;
  return g;
}

HilbertBasis hilbert_basis(const Cone& c) {
  if (!c.is_full_dimensional()) throw Error("Hilbert basis of a lower-dimensional cone");
  const std::size_t n = c.rank();
  const LatticeVector grading = positive_grading(c);

  LatticeVector lo(n), hi(n);
  Integer max_degree = 0;
  for (const auto& r : c.rays()) {
    for (std::size_t k = 0; k < n; ++k) {
      if (r[k] < 0) lo[k] += r[k];
      else hi[k] += r[k];
    }
    max_degree += dot(grading, r);
  }

  std::vector<std::pair<Integer, LatticeVector>> candidates;
  LatticeVector x = lo;
  while (true) {
    if (!x.is_zero() && c.contains(x)) {
      Integer d = dot(grading, x);
      if (d <= max_degree) candidates.emplace_back(d, x);
    }
    std::size_t k = 0;
    while (k < n && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    x[k] += 1;
  }
  std::sort(candidates.begin(), candidates.end());

  HilbertBasis hb;
  for (const auto& [d, v] : candidates) {
    bool reducible = false;
    for (const auto& h : hb.elements)
      if (c.contains(v - h)) {
        reducible = true;
        break;
      }
    if (!reducible) hb.elements.push_back(v);
  }
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

}  // namespace toricmult
