#pragma once

// Exact scalars, lattice vectors and small exact linear algebra.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toricmult {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised for every violated precondition or invalid mathematical input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-length coordinate tuple with exact entries. Ordered lexicographically.
template <class T>
class Vector {
 public:
  using value_type = T;

  Vector() = default;
  explicit Vector(std::size_t n) : coords_(n) {}
  Vector(std::initializer_list<T> xs) : coords_(xs) {}
  explicit Vector(std::vector<T> xs) : coords_(std::move(xs)) {}

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  T& operator[](std::size_t i) { return coords_[i]; }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const T& x) { return x == 0; });
  }

  Vector& operator+=(const Vector& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vector& operator*=(const T& s) {
    for (auto& x : coords_) x *= s;
    return *this;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const T& s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) {
    for (auto& x : a.coords_) x = -x;
    return a;
  }

  friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }
  friend bool operator>(const Vector& a, const Vector& b) { return b < a; }
  friend bool operator<=(const Vector& a, const Vector& b) { return !(b < a); }
  friend bool operator>=(const Vector& a, const Vector& b) { return !(a < b); }

 private:
  void check_size(const Vector& o) const {
    if (o.size() != size()) throw Error("vector length mismatch");
  }

  std::vector<T> coords_;
};

using LatticeVector = Vector<Integer>;
using RationalVector = Vector<Rational>;

LatticeVector lattice_vector(std::initializer_list<long> xs);
RationalVector to_rational(const LatticeVector& v);

/// Pairing between dual lattices (or their rational extensions).
Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Splits v into (v / g, g) with g the gcd of the coordinates.
std::pair<LatticeVector, Integer> primitive(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

/// Positive rescaling of a rational vector to a primitive integer vector.
/// Returns the vector and the positive factor that was applied.
std::pair<LatticeVector, Rational> clear_denominators(const RationalVector& v);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Least integer strictly greater than rho.
Integer floor_strict_bound(const Rational& rho);

/// Solves (rows[i], w) = rhs[i] exactly. Free variables are set to zero.
/// Returns nullopt if the system is inconsistent.
std::optional<RationalVector> solve_linear(const std::vector<LatticeVector>& rows,
                                           const std::vector<Rational>& rhs);

std::size_t rank(const std::vector<LatticeVector>& rows);

/// Determinant of a square integer matrix given by rows.
Integer determinant(const std::vector<LatticeVector>& rows);

/// Parses "p", "-p", "p/q". Throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q", never as a decimal.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const LatticeVector& v);
std::string to_string(const RationalVector& v);

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace toricmult
