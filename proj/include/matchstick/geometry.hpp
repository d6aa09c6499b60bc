#pragma once

#include <cmath>
#include <string_view>

namespace matchstick {

/// A point in the plane, measured in unit (matchstick) lengths.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Rotates `p` counterclockwise about the origin.
Point rotate(Point p, double angle);

/// Numerical tolerances shared by every predicate in the library.
///
/// `unit_tol` is the allowed deviation of an edge length from 1;
/// `geom_tol` decides coincidence, collinearity and angular ties.
struct TolerancePolicy {
  double unit_tol = 1e-9;
  double geom_tol = 1e-11;

  /// unit_tol < 0.1 and 0 <= geom_tol < unit_tol.
  bool is_sane() const;
};

/// Throws InvalidArgument unless `pol.is_sane()`.
void require_sane(const TolerancePolicy& pol);

enum class SegmentRelation {
  disjoint,
  shared_endpoint,
  proper_cross,
  overlap,
  endpoint_on_interior,
};

std::string_view to_string(SegmentRelation rel);

/// proper_cross, overlap and endpoint_on_interior all break the
/// noncrossing requirement of a matchstick drawing.
inline bool is_crossing(SegmentRelation rel) {
  return rel == SegmentRelation::proper_cross || rel == SegmentRelation::overlap ||
         rel == SegmentRelation::endpoint_on_interior;
}

bool unit_distance(Point p, Point q, const TolerancePolicy& pol = {});

/// Classifies the pair of closed segments a1a2 and b1b2.
/// Throws DegenerateSegment if either segment has coincident endpoints.
SegmentRelation segment_relation(Point a1, Point a2, Point b1, Point b2,
                                 const TolerancePolicy& pol = {});

/// Angle of q - p in [0, 2*pi). Throws DegenerateSegment for p == q.
double direction_angle(Point p, Point q, const TolerancePolicy& pol = {});

/// Smaller interior angle of the rhombus abcd, in (0, pi/2].
/// Throws NotARhombus unless abcd is a simple quadrilateral with unit sides.
double rhombus_small_angle(Point a, Point b, Point c, Point d, const TolerancePolicy& pol = {});

/// Angle between two nonzero vectors, in [0, pi]. Accurate for tiny angles.
double angle_between(Point u, Point v);

}  // namespace matchstick
