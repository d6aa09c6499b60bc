#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "matchstick/error.hpp"
#include "matchstick/faces.hpp"
#include "matchstick/generators.hpp"

using namespace matchstick;
using std::numbers::pi;

namespace {

MatchstickGraph square() {
  return MatchstickGraph({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

MatchstickGraph path3() {
  return MatchstickGraph({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {{0, 1}, {1, 2}, {2, 3}});
}

MatchstickGraph sliver(double theta) {
  const Point v{std::cos(theta), std::sin(theta)};
  return MatchstickGraph({{0, 0}, {1, 0}, Point{1, 0} + v, v}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

std::size_t count_kind(const std::vector<FaceClass>& cls, FaceKind k) {
  return static_cast<std::size_t>(
      std::count_if(cls.begin(), cls.end(), [k](const FaceClass& c) { return c.kind == k; }));
}

}  // namespace

TEST_CASE("rotation system: grid vertex is E,N,W,S") {
  const auto g = gen_grid(3);
  const auto rs = rotation_system(g);
  const VertexId center = 4;
  const auto& out = rs.outgoing[center];
  REQUIRE(out.size() == 4);
  // Start from the east neighbour, then counterclockwise.
  std::vector<Point> dirs;
  for (HalfEdgeId h : out) dirs.push_back(g.vertex(head(g, h)) - g.vertex(center));
  auto east = std::find(dirs.begin(), dirs.end(), Point{1, 0});
  REQUIRE(east != dirs.end());
  std::rotate(dirs.begin(), east, dirs.end());
  CHECK(dirs == std::vector<Point>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(rs.position[out[i]] == i);
}

TEST_CASE("rotation system: zonotope vertex matches angle sort") {
  const auto g = gen_zonotope(5);
  const auto rs = rotation_system(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<double> ang;
    for (HalfEdgeId h : rs.outgoing[v]) {
      const Point d = g.vertex(head(g, h)) - g.vertex(v);
      ang.push_back(std::atan2(d.y, d.x));
    }
    // cyclically sorted: at most one descent
    int descents = 0;
    for (std::size_t i = 0; i < ang.size(); ++i) {
      if (ang[(i + 1) % ang.size()] < ang[i]) ++descents;
    }
    CHECK(descents <= 1);
  }
}

TEST_CASE("rotation system rejects overlapping directions") {
  MatchstickGraph g({{0, 0}, {1, 0}, {0.5, 0}}, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(rotation_system(g), Error);
}

TEST_CASE("enumerate_faces: examples") {
  auto fd = enumerate_faces(square());
  CHECK(fd.num_faces() == 2);
  CHECK(fd.f == std::map<std::size_t, std::size_t>{{4, 2}});
  CHECK(fd.signed_area[fd.outer_face] == doctest::Approx(-1.0));

  fd = enumerate_faces(path3());
  CHECK(fd.num_faces() == 1);
  CHECK(fd.boundary_length[0] == 6);

  const auto z5 = gen_zonotope(5);
  fd = enumerate_faces(z5);
  CHECK(fd.num_faces() == 11);
  CHECK(fd.f == std::map<std::size_t, std::size_t>{{4, 10}, {10, 1}});
  CHECK(fd.boundary_length[fd.outer_face] == 10);

  MatchstickGraph edge({{0, 0}, {1, 0}}, {{0, 1}});
  fd = enumerate_faces(edge);
  CHECK(fd.f == std::map<std::size_t, std::size_t>{{2, 1}});

  MatchstickGraph two({{0, 0}, {1, 0}, {0, 3}, {1, 3}}, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(enumerate_faces(two), Error);
  CHECK_THROWS_AS(enumerate_faces(MatchstickGraph{}), Error);
}

TEST_CASE("enumerate_faces: every half-edge once, bounded faces ccw") {
  for (const auto& g : {gen_grid(6), gen_zonotope(7), gen_triangle_free(40),
                        gen_rhombus_strip(4, 0.3, 1.1), path3()}) {
    const auto fd = enumerate_faces(g);
    std::vector<int> seen(2 * g.num_edges(), 0);
    std::size_t total = 0;
    for (FaceId f = 0; f < fd.num_faces(); ++f) {
      for (HalfEdgeId h : fd.faces[f]) {
        ++seen[h];
        CHECK(fd.face_of[h] == f);
      }
      total += fd.boundary_length[f];
      if (f != fd.outer_face) CHECK(fd.signed_area[f] > 0);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    CHECK(total == 2 * g.num_edges());
    const auto n = static_cast<std::int64_t>(g.num_vertices());
    const auto e = static_cast<std::int64_t>(g.num_edges());
    CHECK(n - e + static_cast<std::int64_t>(fd.num_faces()) == 2);
  }
}

TEST_CASE("face walks are consecutive") {
  const auto g = gen_triangle_free(30);
  const auto fd = enumerate_faces(g);
  for (const auto& walk : fd.faces) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      CHECK(head(g, walk[i]) == tail(g, walk[(i + 1) % walk.size()]));
    }
  }
}

TEST_CASE("classify_faces") {
  auto g = square();
  auto fd = enumerate_faces(g);
  auto cls = classify_faces(g, fd, 1.0);
  CHECK(count_kind(cls, FaceKind::fat_rhombus) == 1);
  CHECK(cls[fd.outer_face].kind == FaceKind::outer);
  cls = classify_faces(g, fd);
  CHECK(count_kind(cls, FaceKind::rhombus) == 1);
  CHECK(count_kind(cls, FaceKind::fat_rhombus) == 0);

  g = sliver(0.01);
  fd = enumerate_faces(g);
  cls = classify_faces(g, fd, 1.0);
  CHECK(count_kind(cls, FaceKind::rhombus) == 1);
  for (const auto& c : cls) {
    if (c.rhombic()) CHECK(*c.small_angle == doctest::Approx(0.01));
  }
  CHECK(fat_threshold(1.0) == doctest::Approx(pi / 50));
  CHECK(fat_threshold(1.0) == doctest::Approx(0.0628).epsilon(1e-3));

  // 2-edge path: the only face is a degenerate 4-walk
  MatchstickGraph p2({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}});
  fd = enumerate_faces(p2);
  REQUIRE(fd.num_faces() == 1);
  CHECK(fd.boundary_length[0] == 4);
  cls = classify_faces(p2, fd);
  CHECK_FALSE(cls[0].rhombic());

  // triangles are recognized
  MatchstickGraph tri({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}, {{0, 1}, {1, 2}, {0, 2}});
  fd = enumerate_faces(tri);
  cls = classify_faces(tri, fd);
  CHECK(count_kind(cls, FaceKind::triangle) == 1);
}

TEST_CASE("classify_faces: zonotope rhombi angles") {
  const int k = 6;
  const auto g = gen_zonotope(k);
  const auto fd = enumerate_faces(g);
  const auto cls = classify_faces(g, fd);
  CHECK(count_kind(cls, FaceKind::rhombus) == 15);
  std::multiset<int> multiples;
  for (const auto& c : cls) {
    if (!c.rhombic()) continue;
    const double m = *c.small_angle / (pi / k);
    CHECK(std::abs(m - std::round(m)) < 1e-9);
    multiples.insert(static_cast<int>(std::round(m)));
  }
  // pairs of directions i<j: angle min(j-i, k-(j-i)) * pi/k
  std::multiset<int> expect;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) expect.insert(std::min(j - i, k - (j - i)));
  }
  CHECK(multiples == expect);
}

TEST_CASE("face_vertices and face_edges") {
  const auto g = square();
  const auto fd = enumerate_faces(g);
  const FaceId inner = fd.outer_face == 0 ? 1 : 0;
  auto vs = face_vertices(g, fd, inner);
  std::sort(vs.begin(), vs.end());
  CHECK(vs == std::vector<VertexId>{0, 1, 2, 3});
  auto es = face_edges(fd, inner);
  std::sort(es.begin(), es.end());
  CHECK(es == std::vector<EdgeId>{0, 1, 2, 3});
}
