#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tacsim/error.hpp"

namespace tacsim {

// Pitch frame: origin at the center spot, +x toward the right-hand goal,
// +y toward the top touchline. Units are meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {a.x * s, a.y * s}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Reflection across the y axis (the halfway line).
constexpr Point2 mirror_x(Point2 p) { return {-p.x, p.y}; }

constexpr Point2 midpoint(Point2 a, Point2 b) { return {(a.x + b.x) * 0.5, (a.y + b.y) * 0.5}; }

// The distance metric used for every rating.
inline double euclidean(Point2 p, Point2 q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

struct Pitch {
  double length = 105.0;
  double width = 68.0;
  double goal_width = 14.02;

  double half_length() const { return length * 0.5; }
  double half_width() const { return width * 0.5; }
  double area() const { return length * width; }

  bool contains(Point2 p) const {
    return std::abs(p.x) <= half_length() && std::abs(p.y) <= half_width();
  }

  void validate() const {
    if (!(length > 0.0) || !(width > 0.0) || !(goal_width > 0.0) || !(goal_width < width)) {
      throw InvalidArgument("pitch requires length > 0, width > 0 and 0 < goal_width < width");
    }
  }

  friend bool operator==(const Pitch&, const Pitch&) = default;
};

inline Point2 clamp_to_pitch(Point2 p, const Pitch& pitch) {
  return {std::clamp(p.x, -pitch.half_length(), pitch.half_length()),
          std::clamp(p.y, -pitch.half_width(), pitch.half_width())};
}

inline double to_radians(double deg) { return deg * (std::numbers::pi / 180.0); }
inline double to_degrees(double rad) { return rad * (180.0 / std::numbers::pi); }

// Headings live on a 2^-20 degree grid, where 180 - d is exact; this keeps
// mirroring a heading an exact involution.
inline double quantize_degrees(double deg) { return std::ldexp(std::nearbyint(std::ldexp(deg, 20)), -20); }

// Wraps an angle in degrees into [-180, 180), on the heading grid.
inline double normalize_degrees(double deg) {
  double d = std::fmod(quantize_degrees(deg) + 180.0, 360.0);
  if (d < 0.0) d += 360.0;
  return d - 180.0;
}

// Unit vector for a heading in degrees. Headings beyond +-90 are evaluated
// through their reflection so that unit_vector(180 - a) == mirror_x(unit_vector(a))
// holds bit for bit; the engine relies on this for mirrored matches.
inline Point2 unit_vector(double deg) {
  const double d = normalize_degrees(deg);
  if (d > 90.0) {
    const double r = to_radians(180.0 - d);
    return {-std::cos(r), std::sin(r)};
  }
  if (d < -90.0) {
    const double r = to_radians(-180.0 - d);
    return {-std::cos(r), std::sin(r)};
  }
  const double r = to_radians(d);
  return {std::cos(r), std::sin(r)};
}

// Heading in degrees of a direction vector, in [-180, 180). Reflection-exact
// counterpart of unit_vector. Zero vectors map to 0.
inline double heading_degrees(Point2 v) {
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  const double a = quantize_degrees(to_degrees(std::atan2(v.y, std::abs(v.x))));
  if (v.x >= 0.0) return a;
  return normalize_degrees(a >= 0.0 ? 180.0 - a : -180.0 - a);
}

// Shortest distance from p to the segment [a, b].
inline double distance_to_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return euclidean(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return euclidean(p, a + ab * t);
}

// Moves from `from` toward `to` by at most `max_step`.
inline Point2 step_toward(Point2 from, Point2 to, double max_step) {
  const Point2 d = to - from;
  const double len = norm(d);
  if (len <= max_step || len == 0.0) return to;
  return from + d * (max_step / len);
}

}  // namespace tacsim
