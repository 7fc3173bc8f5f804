#pragma once

// Monomial ideals of k[σ∨ ∩ M] and their Newton polyhedra.

#include <vector>

#include "toricmult/toric.hpp"

namespace toricmult {

struct NewtonFacet {
  LatticeVector normal;  // primitive, lies in σ
  Integer b;             // min of (normal, vertex)
  friend bool operator==(const NewtonFacet&, const NewtonFacet&) = default;
};

/// conv(exponents) + σ∨ as {(n_f, y) >= b_f}. Facets sorted by normal.
struct NewtonPolyhedron {
  std::vector<NewtonFacet> facets;
  std::vector<LatticeVector> vertices;
};

class MonomialIdeal {
 public:
  const ToricVariety& variety() const { return variety_; }
  /// Minimal exponents, sorted lexicographically.
  const std::vector<LatticeVector>& exponents() const { return exponents_; }
  const NewtonPolyhedron& newton() const { return newton_; }

 private:
  friend MonomialIdeal make_ideal(const ToricVariety& x, const std::vector<LatticeVector>& exps);
  ToricVariety variety_;
  std::vector<LatticeVector> exponents_;
  NewtonPolyhedron newton_;
};

MonomialIdeal make_ideal(const ToricVariety& x, const std::vector<LatticeVector>& exps);

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

/// (n_f, y) > c b_f for every facet.
bool interior_contains(const NewtonPolyhedron& np, const Rational& c, const RationalVector& y);

/// Minimal generators of the monomials whose exponent lies in Newt(a).
std::vector<LatticeVector> integral_closure(const MonomialIdeal& a);

bool ideal_membership(const MonomialIdeal& a, const LatticeVector& m);

}  // namespace toricmult
