#pragma once

#include "tautkit/numeric.hpp"

#include <string>
#include <vector>

namespace tautkit {

/// <normal, x> <= offset
struct Halfspace {
  RatVector normal;
  Rational offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

enum class Location { interior, boundary_vertex, boundary_nonvertex, exterior };

std::string to_string(Location l);

/// Bounded full-dimensional convex polytope with exact rational data. Both
/// the vertex list and the facet list are kept; each constructor derives the
/// other representation and cross-checks the two.
///
/// Facets are found by brute force over d-subsets, which is fine for the
/// small polygons this library deals with but grows as C(n, d).
class RatPolytope {
 public:
  /// Convex hull. Non-extreme input points are dropped. Throws InputError if
  /// the points are not full-dimensional.
  static RatPolytope from_vertices(const std::vector<RatVector>& points);

  /// Intersection of halfspaces. Throws InputError if the intersection is
  /// unbounded, empty or lower-dimensional.
  static RatPolytope from_halfspaces(const std::vector<Halfspace>& halfspaces);

  std::size_t dimension() const { return dim_; }
  /// Sorted lexicographically.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  /// Normalized (offset 1 when positive) and sorted.
  const std::vector<Halfspace>& facets() const { return facets_; }

  bool contains(const RatVector& x) const;
  bool contains_origin_in_interior() const;
  bool is_vertex(const RatVector& x) const;
  Location locate(const RatVector& x) const;

  /// Minkowski gauge inf{t >= 0 : x in tP}. Requires the origin in the interior.
  Rational gauge(const RatVector& x) const;

  bool centrally_symmetric() const;

  friend bool operator==(const RatPolytope& a, const RatPolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  RatPolytope() = default;
  void cross_validate() const;

  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Halfspace> facets_;
};

/// {u : <u, v> <= 1 for all v in P}. Throws InputError unless the origin is
/// interior to P.
RatPolytope polar_dual(const RatPolytope& p);

}  // namespace tautkit
