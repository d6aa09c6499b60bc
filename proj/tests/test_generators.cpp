#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "matchstick/error.hpp"
#include "matchstick/faces.hpp"
#include "matchstick/generators.hpp"
#include "matchstick/validate.hpp"

using namespace matchstick;
using std::numbers::pi;

namespace {

// Largest e with 2e <= 4n - 3 - sqrt(8n - 7), done on integers by brute force.
std::int64_t floor_formula(std::int64_t n) {
  for (std::int64_t e = 2 * n; e >= 0; --e) {
    const std::int64_t x = 4 * n - 3 - 2 * e;
    if (x >= 0 && x * x >= 8 * n - 7) return e;
  }
  return 0;
}

std::size_t rhombic_faces(const MatchstickGraph& g) {
  const auto fd = enumerate_faces(g);
  std::size_t c = 0;
  for (const auto& cls : classify_faces(g, fd)) c += cls.rhombic();
  return c;
}

const std::set<Check> kTriangleFree = {Check::unit_lengths, Check::noncrossing, Check::simple,
                                       Check::connected, Check::triangle_free};

}  // namespace

TEST_CASE("floor formula oracle spot values") {
  CHECK(floor_formula(4) == 4);
  CHECK(floor_formula(16) == 25);
  CHECK(floor_formula(22) == 36);
  CHECK(floor_formula(9) == 12);
  CHECK(floor_formula(49) == 86);
  for (std::int64_t n = 2; n <= 3000; ++n) CHECK(triangle_free_edge_target(n) == floor_formula(n));
}

TEST_CASE("gen_grid") {
  auto g = gen_grid(1);
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 0);
  g = gen_grid(2);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  g = gen_grid(7);
  CHECK(g.num_vertices() == 49);
  CHECK(g.num_edges() == 84);
  CHECK(validate(g, {}, kTriangleFree).ok());
  const auto fd = enumerate_faces(g);
  for (FaceId f = 0; f < fd.num_faces(); ++f) {
    if (f != fd.outer_face) CHECK(fd.boundary_length[f] == 4);
  }
  CHECK(fd.boundary_length[fd.outer_face] == 24);
  for (int k = 1; k <= 12; ++k) CHECK(gen_grid(k).num_edges() == std::size_t(2 * k * (k - 1)));
}

TEST_CASE("gen_zonotope") {
  struct Row {
    int k;
    std::size_t n, e, rhombi;
  };
  for (const Row row : {Row{2, 4, 4, 1}, Row{4, 11, 16, 6}, Row{5, 16, 25, 10}}) {
    const auto g = gen_zonotope(row.k);
    CHECK(g.num_vertices() == row.n);
    CHECK(g.num_edges() == row.e);
    CHECK(rhombic_faces(g) == row.rhombi);
    CHECK(validate(g, {}, kTriangleFree).ok());
  }
  for (int k = 2; k <= 12; ++k) {
    const auto g = gen_zonotope(k);
    const auto fd = enumerate_faces(g);
    CHECK(fd.boundary_length[fd.outer_face] == std::size_t(2 * k));
    CHECK(rhombic_faces(g) == std::size_t(k * (k - 1) / 2));
    CHECK(g.num_edges() == std::size_t(k * k));
    CHECK(static_cast<std::int64_t>(g.num_edges()) ==
          floor_formula(static_cast<std::int64_t>(g.num_vertices())));
  }
  CHECK_THROWS_AS(gen_zonotope(1), Error);
  CHECK(zonotope_direction(4, 2).x == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("gen_triangle_free") {
  CHECK(gen_triangle_free(16).num_edges() == 25);
  CHECK(gen_triangle_free(22).num_edges() == 36);
  CHECK(gen_triangle_free(4).num_edges() == 4);
  CHECK(gen_triangle_free(16) == gen_zonotope(5));
  for (int n = 1; n <= 120; ++n) {
    const auto t = triangle_free_construction(n);
    CHECK(t.graph.num_vertices() == std::size_t(n));
    CHECK(static_cast<std::int64_t>(t.graph.num_edges()) == floor_formula(n));
    CHECK(validate(t.graph, {}, kTriangleFree).ok());
    // first added vertex brings one edge, every later one two
    if (t.added > 0) CHECK(t.augmentation.size() == std::size_t(2 * t.added - 1));
  }
}

TEST_CASE("gen_disk_lattice r=3 n=40 against direct enumeration") {
  // (u, w) = (s+t, s-t): |u| <= p, |w| <= m, u = w mod 2. An a-step is
  // (u+1, w+1), a b-step (u+1, w-1).
  const int p = 2, m = 7;
  std::set<std::pair<int, int>> P;
  for (int u = -p; u <= p; ++u) {
    for (int w = -m; w <= m; ++w) {
      if ((u - w) % 2 == 0) P.insert({u, w});
    }
  }
  int steps = 0;
  for (auto [u, w] : P) steps += P.count({u + 1, w + 1}) + P.count({u + 1, w - 1});
  CHECK(P.size() == 37);
  CHECK(steps == 56);

  const auto d = gen_disk_lattice(3, 40);
  CHECK(d.params.p == p);
  CHECK(d.params.m == m);
  CHECK(d.params.lattice_points == 37);
  CHECK(d.params.padding == 3);
  CHECK(d.graph.num_vertices() == 40);
  CHECK(d.graph.num_edges() == 56);
  REQUIRE(d.graph.disk());
  CHECK(d.graph.disk()->radius == 3.0);
  auto checks = kAllChecks;
  checks.erase(Check::connected);
  CHECK(validate(d.graph, {}, checks).ok());
  // padding vertices are isolated and far from everything
  const auto prof = degree_profile(d.graph);
  CHECK(prof.histogram.at(0) == 3);
}

TEST_CASE("gen_disk_lattice small and dense cases") {
  const auto d = gen_disk_lattice(2, 3);
  CHECK(d.params.p == 1);
  CHECK(d.graph.num_edges() >= 1);
  CHECK(d.graph.num_vertices() == 3);
  CHECK_THROWS_AS(gen_disk_lattice(1.9, 10), Error);

  for (double r : {3.0, 4.0}) {
    const auto big = gen_disk_lattice(r, 2000);
    CHECK(big.graph.num_vertices() == 2000);
    const double ratio = double(big.graph.num_edges()) / 2000.0;
    CHECK(ratio >= 2 - 5 / r - 0.2);
    auto checks = kAllChecks;
    checks.erase(Check::connected);
    CHECK(validate(big.graph, {}, checks).ok());
  }
}

TEST_CASE("gen_rhombus_strip") {
  auto g = gen_rhombus_strip(1, pi / 2);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  CHECK(validate(g, {}, kTriangleFree).ok());

  g = gen_rhombus_strip(3, 0.05);
  CHECK(g.num_vertices() == 8);
  CHECK(g.num_edges() == 10);
  const auto fd = enumerate_faces(g);
  CHECK(fd.f == std::map<std::size_t, std::size_t>{{4, 3}, {8, 1}});
  CHECK(validate(g, {}, kTriangleFree).ok());

  for (double tilt : {0.0, 0.7, 2.5, -1.0}) {
    const auto s = gen_rhombus_strip(5, 0.2, tilt);
    CHECK(validate(s, {}, kTriangleFree).ok());
    CHECK(rhombic_faces(s) == 5);
  }
  CHECK_THROWS_AS(gen_rhombus_strip(0, 0.1), Error);
  CHECK_THROWS_AS(gen_rhombus_strip(2, 0.0), Error);
}
