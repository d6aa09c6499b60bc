#include "matchstick/geometry.hpp"

#include <algorithm>
#include <numbers>

#include "matchstick/error.hpp"

namespace matchstick {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::NotARhombus: return "NotARhombus";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::AmbiguousAngles: return "AmbiguousAngles";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InfeasibleRadius: return "InfeasibleRadius";
    case ErrorCode::MissingRadius: return "MissingRadius";
    case ErrorCode::NonpositiveRadius: return "NonpositiveRadius";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::AmbiguousHull: return "AmbiguousHull";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Point rotate(Point p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

bool TolerancePolicy::is_sane() const {
  return std::isfinite(unit_tol) && std::isfinite(geom_tol) && geom_tol >= 0.0 &&
         unit_tol < 0.1 && geom_tol < unit_tol;
}

void require_sane(const TolerancePolicy& pol) {
  if (!pol.is_sane()) {
    throw Error(ErrorCode::InvalidArgument,
                "tolerance policy must satisfy 0 <= geom_tol < unit_tol < 0.1");
  }
}

std::string_view to_string(SegmentRelation rel) {
  switch (rel) {
    case SegmentRelation::disjoint: return "disjoint";
    case SegmentRelation::shared_endpoint: return "shared_endpoint";
    case SegmentRelation::proper_cross: return "proper_cross";
    case SegmentRelation::overlap: return "overlap";
    case SegmentRelation::endpoint_on_interior: return "endpoint_on_interior";
  }
  return "unknown";
}

bool unit_distance(Point p, Point q, const TolerancePolicy& pol) {
  return std::abs(distance(p, q) - 1.0) <= pol.unit_tol;
}

namespace {

int side(double signed_dist, double tol) {
  if (signed_dist > tol) return 1;
  if (signed_dist < -tol) return -1;
  return 0;
}

// Is p (already known to be on the supporting line) within the closed segment?
bool within_segment(Point p, Point s1, Point s2, double tol) {
  const Point d = s2 - s1;
  const double len = norm(d);
  const double t = dot(p - s1, d) / len;
  return t >= -tol && t <= len + tol;
}

}  // namespace

SegmentRelation segment_relation(Point a1, Point a2, Point b1, Point b2,
                                 const TolerancePolicy& pol) {
  const double tol = pol.geom_tol;
  const double la = distance(a1, a2);
  const double lb = distance(b1, b2);
  if (la <= tol || lb <= tol) {
    throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  }

  auto same = [tol](Point p, Point q) { return distance(p, q) <= tol; };
  const int shared = same(a1, b1) + same(a1, b2) + same(a2, b1) + same(a2, b2);
  if (shared >= 2) return SegmentRelation::overlap;

  const Point da = a2 - a1;
  const Point db = b2 - b1;
  const int s1 = side(cross(da, b1 - a1) / la, tol);
  const int s2 = side(cross(da, b2 - a1) / la, tol);
  const int s3 = side(cross(db, a1 - b1) / lb, tol);
  const int s4 = side(cross(db, a2 - b1) / lb, tol);

  if ((s1 == 0 && s2 == 0) || (s3 == 0 && s4 == 0)) {
    // Collinear: compare the projections onto a's direction.
    const Point dir = (1.0 / la) * da;
    const double t1 = dot(b1 - a1, dir);
    const double t2 = dot(b2 - a1, dir);
    const double lo = std::max(0.0, std::min(t1, t2));
    const double hi = std::min(la, std::max(t1, t2));
    if (hi - lo > tol) return SegmentRelation::overlap;
    if (hi - lo >= -tol) {
      return shared == 1 ? SegmentRelation::shared_endpoint
                         : SegmentRelation::endpoint_on_interior;
    }
    return SegmentRelation::disjoint;
  }

  // Two non-parallel supporting lines meet once, at the shared endpoint.
  if (shared == 1) return SegmentRelation::shared_endpoint;

  if (s1 * s2 < 0 && s3 * s4 < 0) return SegmentRelation::proper_cross;

  if ((s1 == 0 && within_segment(b1, a1, a2, tol)) ||
      (s2 == 0 && within_segment(b2, a1, a2, tol)) ||
      (s3 == 0 && within_segment(a1, b1, b2, tol)) ||
      (s4 == 0 && within_segment(a2, b1, b2, tol))) {
    return SegmentRelation::endpoint_on_interior;
  }
  return SegmentRelation::disjoint;
}

double direction_angle(Point p, Point q, const TolerancePolicy& pol) {
  const Point d = q - p;
  if (norm(d) <= pol.geom_tol) {
    throw Error(ErrorCode::DegenerateSegment, "direction of a zero-length segment");
  }
  double a = std::atan2(d.y, d.x);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

double angle_between(Point u, Point v) {
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

double rhombus_small_angle(Point a, Point b, Point c, Point d, const TolerancePolicy& pol) {
  const Point quad[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (distance(quad[i], quad[j]) <= pol.geom_tol) {
        throw Error(ErrorCode::NotARhombus, "repeated vertex");
      }
    }
    if (!unit_distance(quad[i], quad[(i + 1) % 4], pol)) {
      throw Error(ErrorCode::NotARhombus, "side is not of unit length");
    }
  }
  for (int i = 0; i < 4; ++i) {
    const auto adj = segment_relation(quad[i], quad[(i + 1) % 4], quad[(i + 1) % 4],
                                      quad[(i + 2) % 4], pol);
    if (adj != SegmentRelation::shared_endpoint) {
      throw Error(ErrorCode::NotARhombus, "adjacent sides fold onto each other");
    }
  }
  for (int i = 0; i < 2; ++i) {
    const auto opp = segment_relation(quad[i], quad[i + 1], quad[i + 2], quad[(i + 3) % 4], pol);
    if (opp != SegmentRelation::disjoint) {
      throw Error(ErrorCode::NotARhombus, "quadrilateral is not simple");
    }
  }
  const double theta = angle_between(b - a, d - a);
  const double small = std::min(theta, std::numbers::pi - theta);
  if (!(small > 0.0)) throw Error(ErrorCode::NotARhombus, "flat quadrilateral");
  return small;
}

}  // namespace matchstick
