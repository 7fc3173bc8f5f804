#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "toricmult/double_description.hpp"
#include "toricmult/polyhedral.hpp"

namespace toricmult {

bool Halfspace::contains(const RationalVector& y) const {
  Rational s = dot(normal, y);
  return strict ? s > offset : s >= offset;
}

bool Halfspace::contains(const LatticeVector& y) const {
  Rational s = dot(normal, y);
  return strict ? s > offset : s >= offset;
}

void HalfspaceSystem::add(RationalVector normal, Rational offset, bool strict) {
  if (normal.size() != rank) throw Error("halfspace normal has the wrong length");
  rows.push_back({std::move(normal), std::move(offset), strict});
}

void HalfspaceSystem::add(const LatticeVector& normal, const Rational& offset, bool strict) {
  add(to_rational(normal), offset, strict);
}

bool HalfspaceSystem::contains(const RationalVector& y) const {
  return std::all_of(rows.begin(), rows.end(), [&](const Halfspace& h) { return h.contains(y); });
}

bool HalfspaceSystem::contains(const LatticeVector& y) const {
  return std::all_of(rows.begin(), rows.end(), [&](const Halfspace& h) { return h.contains(y); });
}

bool HalfspaceSystem::has_strict_rows() const {
  return std::any_of(rows.begin(), rows.end(), [](const Halfspace& h) { return h.strict; });
}

bool HalfspaceSystem::is_marked_infeasible() const {
  for (const auto& r : rows)
    if (r.normal.is_zero() && !(r.strict ? 0 > r.offset : 0 >= r.offset)) return true;
  return false;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct FmRow {
  LatticeVector a;
  Rational b;
  bool strict = false;
  Bits history;
};

/// Rescales to a primitive integer normal. Zero normals are left alone.
FmRow normalized(const Halfspace& h) {
  FmRow r;
  auto [a, factor] = clear_denominators(h.normal);
  r.a = std::move(a);
  r.b = h.offset * factor;
  r.strict = h.strict;
  return r;
}

bool constant_row_holds(const FmRow& r) { return r.strict ? 0 > r.b : 0 >= r.b; }

/// Fourier–Motzkin state that keeps row histories across successive
/// eliminations so the Chernikov rule stays valid.
class FourierMotzkin {
 public:
  explicit FourierMotzkin(const HalfspaceSystem& h) : rank_(h.rank) {
    const std::size_t m = h.rows.size();
    for (std::size_t i = 0; i < m; ++i) {
      FmRow r = normalized(h.rows[i]);
      if (r.a.is_zero()) {
        if (!constant_row_holds(r)) infeasible_ = true;
        continue;
      }
      r.history = Bits(m);
      r.history.set(i);
      rows_.push_back(std::move(r));
    }
    dedupe();
  }

  bool infeasible() const { return infeasible_; }

  void eliminate(std::size_t k) {
    if (infeasible_) return;
    ++eliminated_;
    std::vector<FmRow> next, pos, neg;
    for (auto& r : rows_) {
      if (r.a[k] > 0) pos.push_back(std::move(r));
      else if (r.a[k] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Bits h = p.history | q.history;
        if (h.count() > eliminated_ + 1) continue;  // Chernikov: implied by other rows
        const Integer cp = -q.a[k], cq = p.a[k];
        FmRow r;
        r.a = LatticeVector(rank_);
        for (std::size_t i = 0; i < rank_; ++i) r.a[i] = cp * p.a[i] + cq * q.a[i];
        r.b = Rational(cp) * p.b + Rational(cq) * q.b;
        r.strict = p.strict || q.strict;
        r.history = std::move(h);
        if (r.a.is_zero()) {
          if (!constant_row_holds(r)) {
            infeasible_ = true;
            rows_.clear();
            return;
          }
          continue;
        }
        auto [prim, g] = primitive(r.a);
        r.a = std::move(prim);
        r.b /= Rational(g);
        next.push_back(std::move(r));
      }
    rows_ = std::move(next);
    dedupe();
  }

  /// Current system restricted to the kept columns, with dominated rows removed.
  HalfspaceSystem snapshot(const std::vector<std::size_t>& keep) const {
    HalfspaceSystem out(keep.size());
    if (infeasible_) {
      out.add(RationalVector(keep.size()), Rational(0), true);
      return out;
    }
    // Same normal: keep the tightest row (larger offset; strict wins ties).
    std::map<LatticeVector, std::pair<Rational, bool>> best;
    for (const auto& r : rows_) {
      LatticeVector a(keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i) a[i] = r.a[keep[i]];
      auto it = best.find(a);
      if (it == best.end()) {
        best.emplace(std::move(a), std::make_pair(r.b, r.strict));
      } else if (r.b > it->second.first || (r.b == it->second.first && r.strict)) {
        it->second = {r.b, r.strict};
      }
    }
    for (const auto& [a, bs] : best) out.add(a, bs.first, bs.second);
    return out;
  }

 private:
  void dedupe() {
    // Exact duplicates only; keep the smallest history.
    std::sort(rows_.begin(), rows_.end(), [](const FmRow& x, const FmRow& y) {
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b < y.b;
      if (x.strict != y.strict) return x.strict < y.strict;
      return x.history.count() < y.history.count();
    });
    std::vector<FmRow> out;
    for (auto& r : rows_) {
      if (!out.empty() && out.back().a == r.a && out.back().b == r.b && out.back().strict == r.strict)
        continue;
      out.push_back(std::move(r));
    }
    rows_ = std::move(out);
  }

  std::size_t rank_;
  std::size_t eliminated_ = 0;
  bool infeasible_ = false;
  std::vector<FmRow> rows_;
};

std::vector<std::size_t> iota_columns(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

HalfspaceSystem eliminate(const HalfspaceSystem& h, const std::vector<std::size_t>& drop) {
  std::vector<bool> dropped(h.rank, false);
  for (auto k : drop) {
    if (k >= h.rank) throw Error("eliminate: variable index out of range");
    dropped[k] = true;
  }
  FourierMotzkin fm(h);
  for (std::size_t k = 0; k < h.rank; ++k)
    if (dropped[k]) fm.eliminate(k);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < h.rank; ++k)
    if (!dropped[k]) keep.push_back(k);
  return fm.snapshot(keep);
}

std::vector<HalfspaceSystem> elimination_stages(const HalfspaceSystem& h, std::size_t count) {
  if (count > h.rank) throw Error("elimination_stages: too many variables");
  std::vector<HalfspaceSystem> stages;
  FourierMotzkin fm(h);
  stages.push_back(fm.snapshot(iota_columns(h.rank)));
  for (std::size_t j = 1; j <= count; ++j) {
    const std::size_t var = h.rank - j;
    fm.eliminate(var);
    stages.push_back(fm.snapshot(iota_columns(var)));
  }
  return stages;
}

namespace {

struct Interval {
  std::optional<Rational> lo, hi;
  bool lo_strict = false, hi_strict = false;
  bool empty = false;
};

/// Feasible values of variable `k` in `sys` once variables 0..k-1 are fixed.
Interval fiber_interval(const HalfspaceSystem& sys, const RationalVector& prefix, std::size_t k) {
  Interval iv;
  for (const auto& row : sys.rows) {
    Rational rest = row.offset;
    for (std::size_t j = 0; j < k; ++j)
      if (row.normal[j] != 0) rest -= row.normal[j] * prefix[j];
    const Rational& a = row.normal[k];
    if (a == 0) {
      if (row.strict ? !(0 > rest) : !(0 >= rest)) iv.empty = true;
      continue;
    }
    Rational bound = rest / a;
    if (a > 0) {
      if (!iv.lo || bound > *iv.lo || (bound == *iv.lo && row.strict)) {
        iv.lo = bound;
        iv.lo_strict = row.strict;
      }
    } else {
      if (!iv.hi || bound < *iv.hi || (bound == *iv.hi && row.strict)) {
        iv.hi = bound;
        iv.hi_strict = row.strict;
      }
    }
  }
  if (iv.lo && iv.hi) {
    if (*iv.lo > *iv.hi || (*iv.lo == *iv.hi && (iv.lo_strict || iv.hi_strict))) iv.empty = true;
  }
  return iv;
}

Rational pick(const Interval& iv) {
  if (iv.lo && iv.hi) {
    // Prefer an integer when one fits.
    Integer t = iv.lo_strict ? floor_strict_bound(*iv.lo) : ceil(*iv.lo);
    Rational rt(t);
    if (rt < *iv.hi || (rt == *iv.hi && !iv.hi_strict)) return rt;
    return (*iv.lo + *iv.hi) / 2;
  }
  if (iv.lo) return Rational(iv.lo_strict ? floor_strict_bound(*iv.lo) : ceil(*iv.lo));
  if (iv.hi) return Rational(iv.hi_strict ? Integer(ceil(*iv.hi) - 1) : floor(*iv.hi));
  return Rational(0);
}

}  // namespace

std::optional<RationalVector> back_substitute(const std::vector<HalfspaceSystem>& stages) {
  if (stages.empty()) throw Error("back_substitute: no stages");
  const std::size_t n = stages.front().rank;
  const std::size_t count = stages.size() - 1;
  const std::size_t fixed = n - count;  // variables not eliminated
  if (stages.back().is_marked_infeasible()) return std::nullopt;
  // Only the eliminated (trailing) variables are chosen here; leading ones must be absent.
  if (fixed != 0) throw Error("back_substitute: stage chain must eliminate every variable");
  RationalVector x(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& sys = stages[n - 1 - k];
    Interval iv = fiber_interval(sys, x, k);
    if (iv.empty) return std::nullopt;
    x[k] = pick(iv);
  }
  return x;
}

VertexSystem hrep_to_vrep(const HalfspaceSystem& h) {
  const std::size_t n = h.rank;
  VertexSystem out;
  out.rank = n;
  if (h.is_marked_infeasible()) return out;

  std::vector<LatticeVector> rows;
  for (const auto& r : h.rows) {
    RationalVector hom(n + 1);
    for (std::size_t i = 0; i < n; ++i) hom[i] = r.normal[i];
    hom[n] = -r.offset;
    rows.push_back(clear_denominators(hom).first);
  }
  LatticeVector t(n + 1);
  t[n] = 1;
  rows.push_back(t);

  auto gens = cone_from_inequalities(n + 1, rows);
  bool has_point = false;
  for (const auto& g : gens.rays)
    if (g[n] > 0) has_point = true;
  if (!has_point) return out;
  if (!gens.lineality.empty()) throw Error("polyhedron contains a line");

  for (const auto& g : gens.rays) {
    if (g[n] > 0) {
      RationalVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = Rational(g[i], g[n]);
      out.vertices.push_back(std::move(v));
    } else {
      LatticeVector r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = g[i];
      out.recession_rays.push_back(primitive(r).first);
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.recession_rays.begin(), out.recession_rays.end());
  return out;
}

HalfspaceSystem vrep_to_hrep(const VertexSystem& v) {
  const std::size_t n = v.rank;
  HalfspaceSystem out(n);
  if (v.is_empty()) {
    out.add(RationalVector(n), Rational(0), true);
    return out;
  }
  std::vector<LatticeVector> gens;
  for (const auto& p : v.vertices) {
    RationalVector hom(n + 1);
    for (std::size_t i = 0; i < n; ++i) hom[i] = p[i];
    hom[n] = 1;
    gens.push_back(clear_denominators(hom).first);
  }
  for (const auto& r : v.recession_rays) {
    LatticeVector hom(n + 1);
    for (std::size_t i = 0; i < n; ++i) hom[i] = r[i];
    gens.push_back(hom);
  }
  // Rows (a, beta) of the dual cone encode (a, y) >= -beta.
  auto dual = cone_from_inequalities(n + 1, gens);
  auto emit = [&](const LatticeVector& g, bool both_sides) {
    LatticeVector a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = g[i];
    if (a.is_zero()) return;
    out.add(a, Rational(-g[n]));
    if (both_sides) out.add(-a, Rational(g[n]));
  };
  for (const auto& l : dual.lineality) emit(l, true);
  for (const auto& r : dual.rays) emit(r, false);
  return out;
}

HalfspaceSystem strict_to_lattice_closed(const HalfspaceSystem& h) {
  HalfspaceSystem out(h.rank);
  for (const auto& r : h.rows) {
    if (!r.strict) {
      out.rows.push_back(r);
      continue;
    }
    auto [a, factor] = clear_denominators(r.normal);
    out.add(a, Rational(floor_strict_bound(r.offset * factor)), false);
  }
  return out;
}

namespace {

void descend(const std::vector<HalfspaceSystem>& stages, std::size_t k, LatticeVector& x,
             RationalVector& xr, std::vector<LatticeVector>& out) {
  const std::size_t n = x.size();
  const auto& sys = stages[n - 1 - k];
  Interval iv = fiber_interval(sys, xr, k);
  if (iv.empty) return;
  if (!iv.lo || !iv.hi) throw Error("lattice_points: polyhedron is unbounded");
  Integer lo = iv.lo_strict ? floor_strict_bound(*iv.lo) : ceil(*iv.lo);
  Integer hi = iv.hi_strict ? Integer(ceil(*iv.hi) - 1) : floor(*iv.hi);
  for (Integer t = lo; t <= hi; ++t) {
    x[k] = t;
    xr[k] = Rational(t);
    if (k + 1 == n) out.push_back(x);
    else descend(stages, k + 1, x, xr, out);
  }
}

}  // namespace

std::vector<LatticeVector> lattice_points(const HalfspaceSystem& h) {
  const std::size_t n = h.rank;
  if (h.is_marked_infeasible()) return {};
  auto stages = elimination_stages(h, n);
  if (stages.back().is_marked_infeasible()) return {};

  std::vector<LatticeVector> normals;
  for (const auto& r : h.rows) normals.push_back(clear_denominators(r.normal).first);
  auto rec = cone_from_inequalities(n, normals);
  if (!rec.lineality.empty() || !rec.rays.empty())
    throw Error("lattice_points: polyhedron is unbounded");

  std::vector<LatticeVector> out;
  if (n == 0) return out;
  LatticeVector x(n);
  RationalVector xr(n);
  descend(stages, 0, x, xr, out);
  return out;
}

}  // namespace toricmult
