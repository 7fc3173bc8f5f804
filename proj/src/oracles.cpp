#include "toricmult/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace toricmult::oracle {

namespace {

using I64 = std::int64_t;
using Row = std::vector<I64>;

I64 det(std::vector<Row> m) {
  // Fraction-free (Bareiss) determinant; entries here are tiny.
  const std::size_t n = m.size();
  I64 sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct Ineq {
  Row n;
  I64 b;
};

/// Every valid inequality (n, y) >= b of Newt(E) whose hyperplane passes through n
/// affinely independent points of E ∪ {e + unit}; this includes all facets.
std::vector<Ineq> naive_facets(const std::vector<Row>& exps) {
  const std::size_t n = exps.front().size();
  std::vector<Row> pts = exps;
  for (const auto& e : exps)
    for (std::size_t i = 0; i < n; ++i) {
      Row p = e;
      p[i] += 1;
      pts.push_back(p);
    }
  std::vector<Ineq> out;
  for (std::size_t i = 0; i < n; ++i) {
    Row u(n, 0);
    u[i] = 1;
    I64 b = exps.front()[i];
    for (const auto& e : exps) b = std::min(b, e[i]);
    out.push_back({u, b});
  }
  std::vector<std::size_t> idx(n);
  // Enumerate n-subsets in lexicographic order.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == n) {
      // Normal via cofactors of the difference vectors p_k - p_0.
      std::vector<Row> diffs;
      for (std::size_t k = 1; k < n; ++k) {
        Row d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = pts[idx[k]][j] - pts[idx[0]][j];
        diffs.push_back(d);
      }
      Row normal(n);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Row> minor;
        for (const auto& d : diffs) {
          Row r;
          for (std::size_t t = 0; t < n; ++t)
            if (t != j) r.push_back(d[t]);
          minor.push_back(r);
        }
        const I64 cof = n == 1 ? 1 : det(minor);
        normal[j] = (j % 2 == 0) ? cof : -cof;
      }
      if (std::all_of(normal.begin(), normal.end(), [](I64 v) { return v == 0; })) return;
      I64 g = 0;
      for (I64 v : normal) g = std::gcd(g, v < 0 ? -v : v);
      for (auto& v : normal) v /= g;
      for (int orient : {1, -1}) {
        Row nn = normal;
        for (auto& v : nn) v *= orient;
        if (std::any_of(nn.begin(), nn.end(), [](I64 v) { return v < 0; })) continue;
        I64 b = 0;
        for (std::size_t j = 0; j < n; ++j) b += nn[j] * pts[idx[0]][j];
        bool valid = true;
        for (const auto& e : exps) {
          I64 s = 0;
          for (std::size_t j = 0; j < n; ++j) s += nn[j] * e[j];
          if (s < b) valid = false;
        }
        if (valid) out.push_back({nn, b});
      }
      return;
    }
    for (std::size_t s = start; s < pts.size(); ++s) {
      idx[depth] = s;
      rec(depth + 1, s + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

std::vector<LatticeVector> howald_generators(const std::vector<LatticeVector>& exps, const Rational& c, int box) {
  if (exps.empty()) throw Error("zero ideal");
  const std::size_t n = exps.front().size();
  std::vector<Row> e64;
  for (const auto& e : exps) {
    Row r;
    for (const auto& x : e) r.push_back(x.convert_to<I64>());
    e64.push_back(r);
  }
  const auto ineqs = naive_facets(e64);
  const I64 p = numerator(c).convert_to<I64>(), q = denominator(c).convert_to<I64>();

  // (n, m + 1) q > p b for every inequality.
  std::vector<Row> members;
  Row m(n, 0);
  while (true) {
    bool in = true;
    for (const auto& f : ineqs) {
      I64 s = 0;
      for (std::size_t j = 0; j < n; ++j) s += f.n[j] * (m[j] + 1);
      if (!(s * q > p * f.b)) {
        in = false;
        break;
      }
    }
    if (in) members.push_back(m);
    std::size_t k = 0;
    while (k < n && m[k] == box) m[k++] = 0;
    if (k == n) break;
    ++m[k];
  }

  auto sum = [](const Row& r) { return std::accumulate(r.begin(), r.end(), I64{0}); };
  std::stable_sort(members.begin(), members.end(), [&](const Row& a, const Row& b) { return sum(a) < sum(b); });
  std::vector<Row> minimal;
  for (const auto& x : members) {
    bool dominated = false;
    for (const auto& g : minimal) {
      bool ge = true;
      for (std::size_t j = 0; j < n; ++j) ge = ge && x[j] >= g[j];
      if (ge) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(x);
  }
  std::vector<LatticeVector> out;
  for (const auto& r : minimal) {
    LatticeVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = r[j];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeVector brute_grading(const ToricVariety& x) {
  LatticeVector g(x.rank());
  for (const auto& v : x.rays()) g += v;
  return g;
}

std::vector<LatticeVector> brute_minimal(const ToricVariety& x, const Integer& degree,
                                         const std::function<bool(const LatticeVector&)>& member) {
  const std::size_t n = x.rank();
  const LatticeVector grading = brute_grading(x);
  auto in_dual = [&](const LatticeVector& m) {
    for (const auto& v : x.rays())
      if (dot(m, v) < 0) return false;
    return true;
  };
  // Box from the dual rays scaled to the degree bound.
  LatticeVector lo(n), hi(n);
  for (const auto& r : x.sigma_dual().rays()) {
    const Integer d = dot(grading, r);
    for (std::size_t k = 0; k < n; ++k) {
      const Rational t = Rational(degree * r[k], d);
      lo[k] = std::min(lo[k], floor(t));
      hi[k] = std::max(hi[k], ceil(t));
    }
  }
  std::vector<LatticeVector> pts;
  LatticeVector m = lo;
  while (true) {
    if (in_dual(m) && dot(grading, m) <= degree && member(m)) pts.push_back(m);
    std::size_t k = 0;
    while (k < n && m[k] == hi[k]) {
      m[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    m[k] += 1;
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [&](const LatticeVector& a, const LatticeVector& b) { return dot(grading, a) < dot(grading, b); });
  std::vector<LatticeVector> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& g : out)
      if (in_dual(p - g)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toricmult::oracle
