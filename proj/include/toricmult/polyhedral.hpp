#pragma once

// Exact cones and polyhedra.
//
// Everything here works over the integers/rationals; no floating point is
// used anywhere, because strict inequalities at rational thresholds decide
// interior membership downstream.

#include <cstddef>
#include <optional>
#include <vector>

#include "toricmult/exact.hpp"

namespace toricmult {

/// Rational polyhedral cone given by its extremal primitive rays.
///
/// The constructor validates: rays primitive, pairwise distinct, extremal, and
/// the cone pointed. Ray order is preserved (divisor data downstream is
/// aligned with it).
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t rank, std::vector<LatticeVector> rays);

  /// Cone spanned by arbitrary nonzero generators; keeps only extremal rays, sorted.
  static Cone generated_by(std::size_t rank, const std::vector<LatticeVector>& gens);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  bool is_full_dimensional() const { return equations_.empty(); }

  /// Inward facet normals (primitive, sorted); equations describe the linear hull.
  const std::vector<LatticeVector>& facet_normals() const { return facets_; }
  const std::vector<LatticeVector>& equations() const { return equations_; }

  bool contains(const LatticeVector& x) const;
  bool contains(const RationalVector& x) const;
  bool contains_in_interior(const LatticeVector& x) const;

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

bool same_ray_set(const Cone& a, const Cone& b);

/// Dual cone, rays sorted lexicographically. Requires a full-dimensional cone.
Cone dual_cone(const Cone& c);

/// Inward primitive facet normals of a full-dimensional cone.
std::vector<LatticeVector> cone_facets(const Cone& c);

struct Halfspace {
  RationalVector normal;
  Rational offset;
  bool strict = false;

  bool contains(const RationalVector& y) const;
  bool contains(const LatticeVector& y) const;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Conjunction of rows (normal, y) >= offset, or > offset when strict.
///
/// A row with zero normal is only ever produced as the infeasibility marker
/// "0 > 0" by elimination.
struct HalfspaceSystem {
  std::size_t rank = 0;
  std::vector<Halfspace> rows;

  HalfspaceSystem() = default;
  explicit HalfspaceSystem(std::size_t r) : rank(r) {}

  void add(RationalVector normal, Rational offset, bool strict = false);
  void add(const LatticeVector& normal, const Rational& offset, bool strict = false);

  bool contains(const RationalVector& y) const;
  bool contains(const LatticeVector& y) const;
  bool has_strict_rows() const;
  /// True iff some row has zero normal and is violated (e.g. the marker 0 > 0).
  bool is_marked_infeasible() const;
};

/// conv(vertices) + cone(recession_rays). An empty vertex list is the empty polyhedron.
struct VertexSystem {
  std::size_t rank = 0;
  std::vector<RationalVector> vertices;
  std::vector<LatticeVector> recession_rays;

  bool is_empty() const { return vertices.empty(); }
};

struct HilbertBasis {
  std::vector<LatticeVector> elements;
};

/// Minimal generating set of the semigroup cone ∩ lattice.
///
/// Candidates are the lattice points of the ray zonotope (every Hilbert basis
/// element lies in a half-open parallelepiped of a simplicial subcone, hence in
/// the zonotope); they are reduced in increasing degree of a positive grading.
HilbertBasis hilbert_basis(const Cone& c);

/// Positive integral grading on a pointed full-dimensional cone: the sum of its facet normals.
LatticeVector positive_grading(const Cone& c);

/// Fourier–Motzkin elimination of the listed variables. A combined row is
/// strict iff one of its parents is. The Chernikov history rule and
/// same-normal dominance prune redundant rows; an infeasible projection comes
/// back as the single marker row 0 > 0.
HalfspaceSystem eliminate(const HalfspaceSystem& h, const std::vector<std::size_t>& drop);

/// Successive single-variable eliminations of the trailing variables;
/// stages[k] has rank h.rank - k. Used for back substitution.
std::vector<HalfspaceSystem> elimination_stages(const HalfspaceSystem& h, std::size_t count);

/// Picks a point of the projection stage chain produced by elimination_stages,
/// coordinates chosen one at a time. Returns nullopt when the system is empty.
std::optional<RationalVector> back_substitute(const std::vector<HalfspaceSystem>& stages);

/// Vertex/ray presentation of the closure of h (strict rows are read as closed).
/// Throws if the polyhedron has a lineality space.
VertexSystem hrep_to_vrep(const HalfspaceSystem& h);

/// Irredundant closed facet presentation of conv(vertices) + cone(rays).
/// Equations of a lower-dimensional polyhedron appear as opposite row pairs.
HalfspaceSystem vrep_to_hrep(const VertexSystem& v);

/// All lattice points of a bounded system, sorted lexicographically.
std::vector<LatticeVector> lattice_points(const HalfspaceSystem& h);

/// Replaces every strict row (n, y) > b by (n', y) >= floor(b') + 1 after
/// scaling n to a primitive integer vector n'. Same lattice points.
HalfspaceSystem strict_to_lattice_closed(const HalfspaceSystem& h);

/// Minimal generators of the up-set S = P' ∩ lattice under adding sigma_dual ∩ lattice.
///
/// Correctness rests on two facts about an up-set S:
///  * g ∈ S is non-minimal iff g - h ∈ S for a single Hilbert basis element h
///    (if g - s ∈ S with s = h_1 + ... + h_k, then g - h_1 = (g - s) + (s - h_1) ∈ S);
///  * every minimal g lies in conv(vertices(P')) + zonotope(rays of sigma_dual)
///    (write g = v + sum λ_i ρ_i over independent rays; λ_i >= 1 allows the step g - ρ_i).
/// The candidate box is the bounding box of that region.
///
/// Preconditions (checked): P' closed and nonempty-or-empty, recession cone of
/// P' equal to sigma_dual. Output sorted lexicographically. Internally parallel
/// (OpenMP) with a 64-bit fast path when the box and row data fit.
std::vector<LatticeVector> minimal_lattice_generators(const HalfspaceSystem& p, const Cone& sigma_dual,
                                                      const HilbertBasis& hb);

/// Serial big-integer reference implementation of minimal_lattice_generators.
std::vector<LatticeVector> minimal_lattice_generators_serial(const HalfspaceSystem& p,
                                                             const Cone& sigma_dual,
                                                             const HilbertBasis& hb);

}  // namespace toricmult
