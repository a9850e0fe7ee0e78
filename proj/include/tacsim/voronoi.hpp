#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "tacsim/error.hpp"
#include "tacsim/geometry.hpp"

namespace tacsim {

using Polygon = std::vector<Point2>;

// Counter-clockwise corners of the pitch rectangle.
inline Polygon pitch_polygon(const Pitch& pitch) {
  const double hl = pitch.half_length();
  const double hw = pitch.half_width();
  return {{-hl, -hw}, {hl, -hw}, {hl, hw}, {-hl, hw}};
}

inline double polygon_area(std::span<const Point2> poly) {
  if (poly.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) twice += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * twice;
}

// Area centroid; falls back to the vertex mean for degenerate polygons.
inline Point2 polygon_centroid(std::span<const Point2> poly) {
  if (poly.empty()) return {};
  const double a = polygon_area(poly);
  if (std::abs(a) < 1e-12) {
    Point2 sum;
    for (Point2 p : poly) sum = sum + p;
    return sum * (1.0 / static_cast<double>(poly.size()));
  }
  // Accumulate relative to the first vertex to keep the sums small.
  const Point2 o = poly[0];
  double cx = 0.0;
  double cy = 0.0;
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const Point2 p = poly[i] - o;
    const Point2 q = poly[i + 1] - o;
    const double c = cross(p, q);
    twice += c;
    cx += (p.x + q.x) * c;
    cy += (p.y + q.y) * c;
  }
  return {o.x + cx / (3.0 * twice), o.y + cy / (3.0 * twice)};
}

// True when every turn of the polygon is counter-clockwise (or straight,
// within `tol` scaled by the edge lengths).
inline bool is_convex_ccw(std::span<const Point2> poly, double tol = 1e-9) {
  const std::size_t n = poly.size();
  if (n < 3) return true;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e1 = poly[(i + 1) % n] - poly[i];
    const Point2 e2 = poly[(i + 2) % n] - poly[(i + 1) % n];
    if (cross(e1, e2) < -tol * (norm(e1) * norm(e2) + 1.0)) return false;
  }
  return true;
}

// Inclusive point-in-convex-polygon test with a distance tolerance.
inline bool convex_contains(std::span<const Point2> poly, Point2 p, double tol = 1e-6) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 e = poly[(i + 1) % n] - a;
    const double len = norm(e);
    if (len == 0.0) continue;
    if (cross(e, p - a) < -tol * len) return false;
  }
  return true;
}

// Keeps the part of a convex polygon where dot(p, normal) <= offset.
inline Polygon clip_half_plane(const Polygon& poly, Point2 normal, double offset) {
  Polygon out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % n];
    const double da = dot(a, normal) - offset;
    const double db = dot(b, normal) - offset;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double t = da / (da - db);
      out.push_back(a + (b - a) * t);
    }
  }
  // Drop vertices that collapsed onto their predecessor.
  Polygon cleaned;
  cleaned.reserve(out.size());
  for (Point2 p : out) {
    if (cleaned.empty() || euclidean(p, cleaned.back()) > 1e-12) cleaned.push_back(p);
  }
  while (cleaned.size() > 1 && euclidean(cleaned.front(), cleaned.back()) <= 1e-12) cleaned.pop_back();
  if (cleaned.size() < 3) cleaned.clear();
  return cleaned;
}

namespace detail {
constexpr double kCoincidentTolerance = 1e-9;
}

// Cell of sites[index] clipped to the pitch. Sites coincident (within 1e-9)
// with a lower-index site get an empty cell.
inline Polygon voronoi_cell(std::span<const Point2> sites, std::size_t index, const Pitch& pitch) {
  const Point2 s = sites[index];
  for (std::size_t j = 0; j < index; ++j) {
    if (euclidean(sites[j], s) <= detail::kCoincidentTolerance) return {};
  }
  Polygon cell = pitch_polygon(pitch);
  for (std::size_t j = 0; j < sites.size() && !cell.empty(); ++j) {
    if (j == index) continue;
    const Point2 t = sites[j];
    if (euclidean(t, s) <= detail::kCoincidentTolerance) continue;
    // |p - s|^2 <= |p - t|^2  <=>  p . (t - s) <= (|t|^2 - |s|^2) / 2
    cell = clip_half_plane(cell, t - s, 0.5 * (dot(t, t) - dot(s, s)));
  }
  return cell;
}

struct VoronoiDiagram {
  std::vector<Point2> sites;
  std::vector<Polygon> cells;  // one per site, counter-clockwise
  Pitch pitch;
};

inline VoronoiDiagram voronoi_partition(std::span<const Point2> sites, const Pitch& pitch) {
  if (sites.empty()) throw InvalidArgument("voronoi_partition requires at least one site");
  pitch.validate();
  VoronoiDiagram d;
  d.sites.assign(sites.begin(), sites.end());
  d.pitch = pitch;
  d.cells.reserve(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) d.cells.push_back(voronoi_cell(sites, i, pitch));
  return d;
}

// Index of the cell containing p. Points on a shared boundary (within 1e-6)
// resolve to the lowest site index.
inline std::size_t cell_of(const VoronoiDiagram& d, Point2 p) {
  if (!d.pitch.contains(p)) throw InvalidArgument("cell_of: point outside the pitch");
  for (std::size_t i = 0; i < d.cells.size(); ++i) {
    if (convex_contains(d.cells[i], p, 1e-6)) return i;
  }
  // Unreachable for a well-formed tiling; fall back to the nearest cell.
  std::size_t best = 0;
  double best_gap = INFINITY;
  for (std::size_t i = 0; i < d.cells.size(); ++i) {
    const auto& c = d.cells[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double g = distance_to_segment(p, c[k], c[(k + 1) % c.size()]);
      if (g < best_gap) {
        best_gap = g;
        best = i;
      }
    }
  }
  return best;
}

}  // namespace tacsim
