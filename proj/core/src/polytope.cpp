#include "tautkit/polytope.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tautkit {

std::string to_string(Location l) {
  switch (l) {
    case Location::interior: return "interior";
    case Location::boundary_vertex: return "boundary-vertex";
    case Location::boundary_nonvertex: return "boundary-nonvertex";
    case Location::exterior: return "exterior";
  }
  return "exterior";
}

namespace {

using RatRows = std::vector<RatVector>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatRows& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_of(RatRows a) { return rref(a).size(); }

// The unique (up to scale) kernel vector, if the kernel is one-dimensional.
std::optional<RatVector> kernel_line(RatRows a, std::size_t cols) {
  const auto pivots = rref(a);
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }
  RatVector v(cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free_col];
  return v;
}

// Unique solution of the square system A x = b.
std::optional<RatVector> solve_unique(const RatRows& a, const RatVector& b) {
  const std::size_t n = a.size();
  RatRows aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

Halfspace normalize(Halfspace h) {
  Rational scale;
  if (h.offset > 0) {
    scale = h.offset;
  } else {
    scale = 0;
    for (const auto& x : h.normal)
      if (x != 0) {
        scale = abs(x);
        break;
      }
    if (h.offset < 0) scale = -h.offset;
  }
  for (auto& x : h.normal) x /= scale;
  h.offset /= scale;
  return h;
}

// Visit every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t affine_rank(const std::vector<RatVector>& pts) {
  if (pts.empty()) return 0;
  RatRows diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVector d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return diffs.empty() ? 0 : rank_of(std::move(diffs));
}

// Facets of conv(points): hyperplanes through d affinely independent points
// with every point on one side.
std::vector<Halfspace> hull_facets(const std::vector<RatVector>& pts, std::size_t d) {
  std::set<Halfspace> found;
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    RatRows rows;
    for (auto i : idx) {
      RatVector row = pts[i];
      row.push_back(-1);  // n . p - c = 0
      rows.push_back(std::move(row));
    }
    const auto line = kernel_line(std::move(rows), d + 1);
    if (!line) return;
    Halfspace h{RatVector(line->begin(), line->end() - 1), line->back()};
    bool above = false;
    bool below = false;
    for (const auto& p : pts) {
      const Rational side = dot(h.normal, p) - h.offset;
      if (side > 0) above = true;
      if (side < 0) below = true;
    }
    if (above && below) return;
    if (above) {
      for (auto& x : h.normal) x = -x;
      h.offset = -h.offset;
    }
    found.insert(normalize(std::move(h)));
  });
  return {found.begin(), found.end()};
}

std::vector<RatVector> tight_vertices(const std::vector<RatVector>& pts,
                                      const std::vector<Halfspace>& facets, std::size_t d) {
  std::set<RatVector> out;
  for (const auto& p : pts) {
    RatRows normals;
    for (const auto& f : facets)
      if (dot(f.normal, p) == f.offset) normals.push_back(f.normal);
    if (!normals.empty() && rank_of(std::move(normals)) == d) out.insert(p);
  }
  return {out.begin(), out.end()};
}

}  // namespace

RatPolytope RatPolytope::from_vertices(const std::vector<RatVector>& points) {
  if (points.empty()) throw InputError("polytope: no points");
  const std::size_t d = points.front().size();
  if (d == 0) throw InputError("polytope: zero-dimensional points");
  for (const auto& p : points)
    if (p.size() != d) throw InputError("polytope: points of mixed dimension");
  if (affine_rank(points) != d) throw InputError("polytope: points are not full-dimensional");

  const std::set<RatVector> unique(points.begin(), points.end());
  const std::vector<RatVector> pts(unique.begin(), unique.end());

  RatPolytope p;
  p.dim_ = d;
  p.facets_ = hull_facets(pts, d);
  p.vertices_ = tight_vertices(pts, p.facets_, d);
  p.cross_validate();
  return p;
}

RatPolytope RatPolytope::from_halfspaces(const std::vector<Halfspace>& halfspaces) {
  if (halfspaces.empty()) throw InputError("polytope: no halfspaces");
  const std::size_t d = halfspaces.front().normal.size();
  for (const auto& h : halfspaces)
    if (h.normal.size() != d) throw InputError("polytope: halfspaces of mixed dimension");

  // Bounded iff the normals positively span R^d, i.e. the origin is interior
  // to their convex hull.
  std::vector<RatVector> normals;
  for (const auto& h : halfspaces) normals.push_back(h.normal);
  normals.push_back(RatVector(d, Rational(0)));
  if (affine_rank(normals) != d) throw InputError("polytope: halfspaces define an unbounded set");
  normals.pop_back();
  {
    const auto cone = hull_facets(normals, d);
    for (const auto& f : cone) {
      if (!(f.offset > 0)) throw InputError("polytope: halfspaces define an unbounded set");
    }
  }

  std::set<RatVector> candidates;
  for_each_subset(halfspaces.size(), d, [&](const std::vector<std::size_t>& idx) {
    RatRows a;
    RatVector b;
    for (auto i : idx) {
      a.push_back(halfspaces[i].normal);
      b.push_back(halfspaces[i].offset);
    }
    auto x = solve_unique(a, b);
    if (!x) return;
    for (const auto& h : halfspaces)
      if (dot(h.normal, *x) > h.offset) return;
    candidates.insert(std::move(*x));
  });
  if (candidates.empty()) throw InputError("polytope: halfspaces have empty intersection");
  return from_vertices({candidates.begin(), candidates.end()});
}

void RatPolytope::cross_validate() const {
  for (const auto& v : vertices_)
    for (const auto& f : facets_)
      if (dot(f.normal, v) > f.offset) throw std::logic_error("polytope: vertex violates a facet");
  for (const auto& f : facets_) {
    std::vector<RatVector> on;
    for (const auto& v : vertices_)
      if (dot(f.normal, v) == f.offset) on.push_back(v);
    if (on.size() < dim_ || affine_rank(on) + 1 != dim_)
      throw std::logic_error("polytope: facet not spanned by vertices");
  }
}

bool RatPolytope::contains(const RatVector& x) const {
  if (x.size() != dim_) throw InputError("polytope: dimension mismatch");
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

bool RatPolytope::contains_origin_in_interior() const {
  for (const auto& f : facets_)
    if (!(f.offset > 0)) return false;
  return true;
}

bool RatPolytope::is_vertex(const RatVector& x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

Location RatPolytope::locate(const RatVector& x) const {
  if (x.size() != dim_) throw InputError("polytope: dimension mismatch");
  bool tight = false;
  for (const auto& f : facets_) {
    const Rational v = dot(f.normal, x);
    if (v > f.offset) return Location::exterior;
    if (v == f.offset) tight = true;
  }
  if (!tight) return Location::interior;
  return is_vertex(x) ? Location::boundary_vertex : Location::boundary_nonvertex;
}

Rational RatPolytope::gauge(const RatVector& x) const {
  if (x.size() != dim_) throw InputError("polytope: dimension mismatch");
  if (!contains_origin_in_interior()) throw InputError("gauge: origin is not interior");
  Rational best = 0;
  for (const auto& f : facets_) best = std::max(best, Rational(dot(f.normal, x) / f.offset));
  return best;
}

bool RatPolytope::centrally_symmetric() const {
  for (const auto& v : vertices_) {
    RatVector neg = v;
    for (auto& x : neg) x = -x;
    if (!is_vertex(neg)) return false;
  }
  return true;
}

RatPolytope polar_dual(const RatPolytope& p) {
  if (!p.contains_origin_in_interior()) throw InputError("polar_dual: origin is not interior");
  // Facet <n, x> <= 1 becomes the dual vertex n; vertex v becomes <v, u> <= 1.
  std::vector<RatVector> dual_vertices;
  for (const auto& f : p.facets()) {
    RatVector u = f.normal;
    for (auto& x : u) x /= f.offset;
    dual_vertices.push_back(std::move(u));
  }
  RatPolytope dual = RatPolytope::from_vertices(dual_vertices);

  std::vector<Halfspace> expected;
  for (const auto& v : p.vertices()) expected.push_back(Halfspace{v, Rational(1)});
  std::sort(expected.begin(), expected.end());
  if (expected != dual.facets()) throw std::logic_error("polar_dual: facet/vertex mismatch");
  return dual;
}

}  // namespace tautkit
