#include <doctest.h>

#include <cmath>
#include <numbers>

#include "matchstick/error.hpp"
#include "matchstick/geometry.hpp"

using namespace matchstick;
using std::numbers::pi;

TEST_CASE("unit_distance") {
  CHECK(unit_distance({0, 0}, {1, 0}));
  CHECK_FALSE(unit_distance({0, 0}, {0.5, 0}));
  const double eps = 0.1, delta = std::sqrt(1 - eps * eps);
  CHECK(unit_distance({0, 0}, {delta, eps}));
  CHECK_FALSE(unit_distance({0, 0}, {1 + 1e-6, 0}));
}

TEST_CASE("segment_relation classes") {
  CHECK(segment_relation({0, 0}, {1, 0}, {0, 1}, {1, 1}) == SegmentRelation::disjoint);
  CHECK(segment_relation({0, 0}, {1, 0}, {1, 0}, {1, 1}) == SegmentRelation::shared_endpoint);
  CHECK(segment_relation({0, 0}, {1, 0}, {0.5, -0.5}, {0.5, 0.5}) ==
        SegmentRelation::proper_cross);
  CHECK(segment_relation({0, 0}, {1, 0}, {0.5, 0}, {1.5, 0}) == SegmentRelation::overlap);
  CHECK(segment_relation({0, 0}, {1, 0}, {0, 0}, {1, 0}) == SegmentRelation::overlap);
  CHECK(segment_relation({0, 0}, {1, 0}, {0.5, 0}, {0.5, 1}) ==
        SegmentRelation::endpoint_on_interior);
  // collinear, touching at one shared endpoint only
  CHECK(segment_relation({0, 0}, {1, 0}, {1, 0}, {2, 0}) == SegmentRelation::shared_endpoint);
  CHECK(segment_relation({0, 0}, {1, 0}, {2, 0}, {3, 0}) == SegmentRelation::disjoint);
  CHECK_THROWS_AS(segment_relation({0, 0}, {0, 0}, {1, 0}, {1, 1}), Error);
}

TEST_CASE("segment_relation is symmetric and endpoint-order free") {
  const Point segs[][2] = {{{0, 0}, {1, 0}},     {{0.5, -0.5}, {0.5, 0.5}}, {{1, 0}, {1, 1}},
                           {{0.5, 0}, {1.5, 0}}, {{0.5, 0}, {0.5, 1}},      {{0, 1}, {1, 1}},
                           {{2, 0}, {3, 0}}};
  for (const auto& a : segs) {
    for (const auto& b : segs) {
      if (&a == &b) continue;
      const auto rel = segment_relation(a[0], a[1], b[0], b[1]);
      CHECK(segment_relation(b[0], b[1], a[0], a[1]) == rel);
      CHECK(segment_relation(a[1], a[0], b[0], b[1]) == rel);
      CHECK(segment_relation(a[0], a[1], b[1], b[0]) == rel);
    }
  }
}

TEST_CASE("direction_angle") {
  CHECK(direction_angle({0, 0}, {1, 0}) == doctest::Approx(0));
  CHECK(direction_angle({0, 0}, {0, 1}) == doctest::Approx(pi / 2));
  CHECK(direction_angle({0, 0}, {-1, 0}) == doctest::Approx(pi));
  CHECK(direction_angle({0, 0}, {0, -1}) == doctest::Approx(3 * pi / 2));
  CHECK_THROWS_AS(direction_angle({1, 1}, {1, 1}), Error);
}

TEST_CASE("rhombus_small_angle") {
  CHECK(rhombus_small_angle({0, 0}, {1, 0}, {1, 1}, {0, 1}) == doctest::Approx(pi / 2));
  const Point v{std::cos(pi / 6), std::sin(pi / 6)};
  CHECK(rhombus_small_angle({0, 0}, {1, 0}, Point{1, 0} + v, v) == doctest::Approx(pi / 6));

  // Angle between (delta, eps) and (delta, -eps): acos(a.b) evaluated
  // directly, compared against the closed form 2 asin(eps).
  const double eps = 0.1, delta = std::sqrt(1 - eps * eps);
  const Point a{delta, eps}, b{delta, -eps};
  const double oracle = std::acos(delta * delta - eps * eps);
  const double got = rhombus_small_angle({0, 0}, a, a + b, b);
  CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(got == doctest::Approx(0.200335).epsilon(1e-6));

  CHECK_THROWS_AS(rhombus_small_angle({0, 0}, {1, 0}, {1, 2}, {0, 1}), Error);  // not unit
  CHECK_THROWS_AS(rhombus_small_angle({0, 0}, {1, 0}, {0, 1}, {1, 1}), Error);  // bowtie
}

TEST_CASE("predicates survive rigid motions") {
  const TolerancePolicy pol;
  const Point quad[4] = {{0, 0}, {1, 0}, {1.3, 0.9539392014169456}, {0.3, 0.9539392014169456}};
  const double base = rhombus_small_angle(quad[0], quad[1], quad[2], quad[3]);
  for (double rot : {0.3, 1.7, -2.2}) {
    const Point shift{5.25, -3.5};
    Point q[4];
    for (int i = 0; i < 4; ++i) q[i] = rotate(quad[i], rot) + shift;
    CHECK(std::abs(rhombus_small_angle(q[0], q[1], q[2], q[3]) - base) <= 10 * pol.geom_tol);
    CHECK(unit_distance(q[0], q[1]));
  }
  CHECK(base + (pi - base) == doctest::Approx(pi));
}

TEST_CASE("tolerance policy sanity") {
  CHECK(TolerancePolicy{}.is_sane());
  CHECK_FALSE(TolerancePolicy{0.2, 1e-11}.is_sane());
  CHECK_FALSE(TolerancePolicy{1e-9, 1e-9}.is_sane());
  CHECK_THROWS_AS(require_sane({1e-9, 1e-6}), Error);
}
