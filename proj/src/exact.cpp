#include "toricmult/exact.hpp"

#include <cctype>

namespace toricmult {

LatticeVector lattice_vector(std::initializer_list<long> xs) {
  LatticeVector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

namespace {

template <class R, class A, class B>
R pairing(const A& a, const B& b) {
  if (a.size() != b.size()) throw Error("pairing of vectors of different length");
  R s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += R(a[i]) * R(b[i]);
  return s;
}

}  // namespace

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error("pairing of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
Rational dot(const LatticeVector& a, const RationalVector& b) { return pairing<Rational>(a, b); }
Rational dot(const RationalVector& a, const LatticeVector& b) { return pairing<Rational>(a, b); }
Rational dot(const RationalVector& a, const RationalVector& b) { return pairing<Rational>(a, b); }

std::pair<LatticeVector, Integer> primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  if (g == 0) throw Error("zero vector has no primitive part");
  LatticeVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return {std::move(p), g};
}

bool is_primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g == 1;
}

std::pair<LatticeVector, Rational> clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  LatticeVector z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = numerator(v[i]) * (l / denominator(v[i]));
  if (z.is_zero()) return {z, Rational(1)};
  auto [p, g] = primitive(z);
  return {std::move(p), Rational(l, g)};
}

Integer floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rational& q) { return -floor(-q); }

Integer floor_strict_bound(const Rational& rho) { return floor(rho) + 1; }

std::optional<RationalVector> solve_linear(const std::vector<LatticeVector>& rows,
                                           const std::vector<Rational>& rhs) {
  if (rows.size() != rhs.size()) throw Error("solve_linear: row/rhs count mismatch");
  if (rows.empty()) return RationalVector();
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw Error("solve_linear: rows of different length");

  // Fraction-free (Bareiss) elimination on the augmented integer matrix.
  Integer scale = 1;
  for (const auto& b : rhs) scale = boost::multiprecision::lcm(scale, denominator(b));
  const std::size_t m = rows.size();
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j] * scale;
    a[i][n] = numerator(rhs[i]) * (scale / denominator(rhs[i]));
  }

  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j <= n; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][n] != 0) return std::nullopt;

  RationalVector w(n);
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    Rational s = Rational(a[k][n]);
    for (std::size_t j = col + 1; j < n; ++j)
      if (a[k][j] != 0) s -= Rational(a[k][j]) * w[j];
    w[col] = s / Rational(a[k][col]);
  }
  return w;
}

std::size_t rank(const std::vector<LatticeVector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) a.push_back(r.coords());
  const std::size_t m = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

Integer determinant(const std::vector<LatticeVector>& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a;
  for (const auto& r : rows) a.push_back(r.coords());
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw Error("malformed rational '" + std::string(text) + "'");
    return Rational(to_int(text));
  }
  auto num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-')
    throw Error("malformed rational '" + std::string(text) + "'");
  Integer d = to_int(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(to_int(num), d);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {
template <class V>
std::string join(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}
}  // namespace

std::string to_string(const LatticeVector& v) { return join(v); }
std::string to_string(const RationalVector& v) { return join(v); }

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << to_string(v); }

}  // namespace toricmult
