#include <algorithm>
#include <cstdint>
#include <limits>

#include "toricmult/polyhedral.hpp"

namespace toricmult {

namespace {

struct IntRow {
  LatticeVector a;
  Integer b;  // lattice points satisfy (a, y) >= b
};

/// Shared preparation: integer rows, precondition checks and the candidate box.
struct Prepared {
  bool empty = true;
  std::vector<IntRow> rows;
  LatticeVector lo, hi;
};

Prepared prepare(const HalfspaceSystem& p, const Cone& sigma_dual) {
  if (p.rank != sigma_dual.rank()) throw Error("minimal_lattice_generators: rank mismatch");
  if (!sigma_dual.is_full_dimensional()) throw Error("minimal_lattice_generators: sigma_dual is not full-dimensional");
  Prepared out;
  HalfspaceSystem closed = p.has_strict_rows() ? strict_to_lattice_closed(p) : p;
  if (closed.is_marked_infeasible()) return out;
  VertexSystem v = hrep_to_vrep(closed);
  if (v.is_empty()) return out;

  auto expected = sigma_dual.rays();
  std::sort(expected.begin(), expected.end());
  if (v.recession_rays != expected)
    throw Error("minimal_lattice_generators: recession cone of the system differs from sigma_dual");
  for (const auto& x : v.vertices)
    if (!sigma_dual.contains(x))
      throw Error("minimal_lattice_generators: system is not contained in sigma_dual");

  const std::size_t n = p.rank;
  for (const auto& r : closed.rows) {
    if (r.normal.is_zero()) continue;
    auto [a, factor] = clear_denominators(r.normal);
    out.rows.push_back({std::move(a), ceil(r.offset * factor)});
  }

  out.lo = LatticeVector(n);
  out.hi = LatticeVector(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational mn = v.vertices.front()[k], mx = mn;
    for (const auto& x : v.vertices) {
      mn = std::min(mn, x[k]);
      mx = std::max(mx, x[k]);
    }
    out.lo[k] = floor(mn);
    out.hi[k] = ceil(mx);
    for (const auto& r : sigma_dual.rays()) {
      if (r[k] < 0) out.lo[k] += r[k];
      else out.hi[k] += r[k];
    }
  }
  out.empty = false;
  return out;
}

bool satisfies(const std::vector<IntRow>& rows, const LatticeVector& y) {
  for (const auto& r : rows)
    if (dot(r.a, y) < r.b) return false;
  return true;
}

// ---- parallel kernel -------------------------------------------------------

template <class T>
struct KernelRows {
  std::size_t n = 0;
  std::vector<T> a;  // row-major, rows x n
  std::vector<T> b;
  std::vector<T> steps;  // Hilbert basis, row-major
  std::vector<T> lo, hi;
};

template <class T>
T to_scalar(const Integer& z) {
  if constexpr (std::is_same_v<T, Integer>) return z;
  else return z.convert_to<T>();
}

template <class T>
KernelRows<T> convert(const Prepared& prep, const HilbertBasis& hb, std::size_t n) {
  KernelRows<T> k;
  k.n = n;
  for (const auto& r : prep.rows) {
    for (std::size_t i = 0; i < n; ++i) k.a.push_back(to_scalar<T>(r.a[i]));
    k.b.push_back(to_scalar<T>(r.b));
  }
  for (const auto& h : hb.elements)
    for (std::size_t i = 0; i < n; ++i) k.steps.push_back(to_scalar<T>(h[i]));
  for (std::size_t i = 0; i < n; ++i) {
    k.lo.push_back(to_scalar<T>(prep.lo[i]));
    k.hi.push_back(to_scalar<T>(prep.hi[i]));
  }
  return k;
}

template <class T>
T floor_div(const T& num, const T& den) {  // den != 0
  T q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

template <class T>
T ceil_div(const T& num, const T& den) {
  return -floor_div<T>(-num, den);
}

/// Emits the minimal elements whose leading coordinate equals x0. Requires n >= 2.
template <class T>
void scan_slice(const KernelRows<T>& k, const T& x0, std::vector<LatticeVector>& out) {
  const std::size_t n = k.n;
  const std::size_t m = k.b.size();
  const std::size_t nsteps = k.steps.size() / n;
  std::vector<T> x(k.lo);
  x[0] = x0;
  std::vector<T> y(n);

  auto in_system = [&](const std::vector<T>& pt) {
    for (std::size_t r = 0; r < m; ++r) {
      T s = 0;
      for (std::size_t i = 0; i < n; ++i) s += k.a[r * n + i] * pt[i];
      if (s < k.b[r]) return false;
    }
    return true;
  };

  const std::size_t last = n - 1;
  while (true) {
    // Tighten the last coordinate from the rows, given the prefix.
    T lo = k.lo[last], hi = k.hi[last];
    bool feasible = true;
    for (std::size_t r = 0; r < m && feasible; ++r) {
      T rest = k.b[r];
      for (std::size_t i = 0; i < last; ++i) rest -= k.a[r * n + i] * x[i];
      const T& c = k.a[r * n + last];
      if (c > 0) lo = std::max(lo, ceil_div<T>(rest, c));
      else if (c < 0) hi = std::min(hi, floor_div<T>(rest, c));
      else if (rest > 0) feasible = false;
    }
    if (feasible)
      for (T t = lo; t <= hi; ++t) {
        x[last] = t;
        bool minimal = true;
        for (std::size_t s = 0; s < nsteps && minimal; ++s) {
          for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - k.steps[s * n + i];
          if (in_system(y)) minimal = false;
        }
        if (minimal) {
          LatticeVector g(n);
          for (std::size_t i = 0; i < n; ++i) g[i] = Integer(x[i]);
          out.push_back(std::move(g));
        }
      }
    // Advance the middle coordinates 1..last-1.
    std::size_t i = 1;
    while (i < last && x[i] == k.hi[i]) {
      x[i] = k.lo[i];
      ++i;
    }
    if (i >= last) break;
    x[i] += 1;
  }
}

template <class T>
std::vector<LatticeVector> run_kernel(const KernelRows<T>& k) {
  std::vector<LatticeVector> out;
  const long long count = static_cast<long long>(k.hi[0] - k.lo[0]) + 1;
#pragma omp parallel
  {
    std::vector<LatticeVector> local;
#pragma omp for schedule(dynamic)
    for (long long j = 0; j < count; ++j) scan_slice(k, T(k.lo[0] + T(j)), local);
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

/// 64-bit arithmetic is exact when every partial dot product stays far below 2^63.
bool fits_int64(const Prepared& prep, const HilbertBasis& hb, std::size_t n) {
  Integer coef = 0, coord = 0;
  for (const auto& r : prep.rows) {
    for (const auto& x : r.a) coef = std::max(coef, Integer(abs(x)));
    coord = std::max(coord, Integer(abs(r.b)));
  }
  Integer step = 0;
  for (const auto& h : hb.elements)
    for (const auto& x : h) step = std::max(step, Integer(abs(x)));
  for (std::size_t i = 0; i < n; ++i) {
    coord = std::max(coord, Integer(abs(prep.lo[i]) + step));
    coord = std::max(coord, Integer(abs(prep.hi[i]) + step));
  }
  const Integer limit = Integer(1) << 60;
  return Integer(n + 2) * (coef + 1) * (coord + 1) < limit;
}

}  // namespace

std::vector<LatticeVector> minimal_lattice_generators(const HalfspaceSystem& p, const Cone& sigma_dual,
                                                      const HilbertBasis& hb) {
  Prepared prep = prepare(p, sigma_dual);
  if (prep.empty) return {};
  const std::size_t n = p.rank;
  std::vector<LatticeVector> out;
  if (n == 1) {
    // Degenerate slice layout; the reference loop is already optimal in rank 1.
    return minimal_lattice_generators_serial(p, sigma_dual, hb);
  }
  if (fits_int64(prep, hb, n)) out = run_kernel(convert<std::int64_t>(prep, hb, n));
  else out = run_kernel(convert<Integer>(prep, hb, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> minimal_lattice_generators_serial(const HalfspaceSystem& p,
                                                             const Cone& sigma_dual,
                                                             const HilbertBasis& hb) {
  Prepared prep = prepare(p, sigma_dual);
  if (prep.empty) return {};
  const std::size_t n = p.rank;
  std::vector<LatticeVector> out;
  LatticeVector x = prep.lo;
  while (true) {
    if (satisfies(prep.rows, x)) {
      bool minimal = true;
      for (const auto& h : hb.elements)
        if (satisfies(prep.rows, x - h)) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(x);
    }
    std::size_t k = 0;
    while (k < n && x[k] == prep.hi[k]) {
      x[k] = prep.lo[k];
      ++k;
    }
    if (k == n) break;
    x[k] += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toricmult
