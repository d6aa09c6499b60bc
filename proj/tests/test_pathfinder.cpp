#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "matchstick/analysis.hpp"
#include "matchstick/error.hpp"
#include "matchstick/generators.hpp"
#include "matchstick/pathfinder.hpp"
#include "matchstick/reduction.hpp"

using namespace matchstick;

namespace {

MatchstickGraph square() {
  return MatchstickGraph({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

const Point kU{std::cos(-0.3), std::sin(-0.3)};
const Point kV{std::cos(0.2), std::sin(0.2)};

// One rhombus L=0, B=1, T=2, R=3 with its bottom vertex below the chord.
MatchstickGraph hat1() {
  return MatchstickGraph({{0, 0}, kU, kV, kU + kV}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// Two such rhombi meeting at vertex 3.
MatchstickGraph hat2() {
  const Point r = kU + kV;
  return MatchstickGraph({{0, 0}, kU, kV, r, r + kU, r + kV, r + kU + kV},
                         {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

struct Frame {
  MatchstickGraph g;
  FaceDecomposition fd;
  std::vector<FaceClass> cls;
  PathFrame frame;
  Frame(MatchstickGraph graph, VertexId a, VertexId b)
      : g(std::move(graph)), fd(enumerate_faces(g)), cls(classify_faces(g, fd)),
        frame(g, fd, cls, *g.find_edge(a, b)) {}
};

// Brute force: e ~ f iff some face walk uses both.
std::set<std::pair<EdgeId, EdgeId>> coface_pairs(const FaceDecomposition& fd) {
  std::set<std::pair<EdgeId, EdgeId>> out;
  for (FaceId f = 0; f < fd.num_faces(); ++f) {
    const auto es = face_edges(fd, f);
    for (EdgeId a : es) {
      for (EdgeId b : es) {
        if (a != b) out.insert({std::min(a, b), std::max(a, b)});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("neighborhood graph examples") {
  auto N = build_neighborhood(square());
  CHECK(N.num_nodes() == 4);
  for (EdgeId e = 0; e < 4; ++e) CHECK(N.neighbors(e).size() == 3);

  N = build_neighborhood(MatchstickGraph({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}}));
  CHECK(N.neighbors(0).size() == 1);
  CHECK(N.neighbors(0)[0].first == 1);

  // strip of two: the middle rail a1-b1 touches every edge of both rhombi
  const auto s = gen_rhombus_strip(2, 0.05);
  N = build_neighborhood(s);
  const EdgeId mid = *s.find_edge(1, 4);
  CHECK(N.neighbors(mid).size() == 6);
}

TEST_CASE("neighborhood adjacency is co-face incidence") {
  for (const auto& g : {gen_grid(4), gen_zonotope(5), gen_triangle_free(19),
                        gen_rhombus_strip(6, 0.2, 0.4)}) {
    REQUIRE(g.num_edges() <= 50);
    const auto fd = enumerate_faces(g);
    const auto N = build_neighborhood(fd, g.num_edges());
    std::set<std::pair<EdgeId, EdgeId>> got;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (auto [f, face] : N.neighbors(e)) {
        got.insert({std::min(e, f), std::max(e, f)});
        const auto es = face_edges(fd, face);
        CHECK(std::find(es.begin(), es.end(), e) != es.end());
        CHECK(std::find(es.begin(), es.end(), f) != es.end());
      }
    }
    CHECK(got == coface_pairs(fd));
  }
}

TEST_CASE("edge distance and nearest irregular") {
  auto g = square();
  auto fd = enumerate_faces(g);
  auto cls = classify_faces(g, fd);
  auto ir = irregular_edge_count(g, fd, cls);
  auto N = build_neighborhood(fd, g.num_edges());
  for (EdgeId e = 0; e < 4; ++e) {
    const auto near = nearest_irregular(N, ir.irregular, e);
    CHECK(near.distance == 0);
    CHECK(near.edge == e);
  }

  g = gen_rhombus_strip(3, 0.05);
  fd = enumerate_faces(g);
  cls = classify_faces(g, fd);
  ir = irregular_edge_count(g, fd, cls);
  N = build_neighborhood(fd, g.num_edges());
  for (auto [a, b] : {std::pair<VertexId, VertexId>{1, 5}, {2, 6}}) {
    const EdgeId rail = *g.find_edge(a, b);
    CHECK_FALSE(ir.irregular[rail]);
    CHECK(nearest_irregular(N, ir.irregular, rail).distance == 1);
  }
  const auto dist = irregular_distances(N, ir.irregular);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    CHECK(dist[e] == (ir.irregular[e] ? 0 : 1));
  }
  const EdgeId first = *g.find_edge(0, 4), last = *g.find_edge(3, 7);
  CHECK(edge_distance(N, first, first) == 0);
  CHECK(edge_distance(N, first, last) == 1);  // both on the outer face
  const EdgeId mid1 = *g.find_edge(1, 5), mid2 = *g.find_edge(2, 6);
  CHECK(edge_distance(N, mid1, mid2) == 1);
  CHECK(edge_distance(N, mid1, last) == 2);
}

TEST_CASE("edge distance across two components throws") {
  kernels::Incidence inc;
  inc.groups_of_node = {{0}, {0}, {1}};
  inc.nodes_of_group = {{0, 1}, {2}};
  NeighborhoodGraph N{inc};
  CHECK(edge_distance(N, 0, 1) == 1);
  CHECK_THROWS_AS(edge_distance(N, 0, 2), Error);
  CHECK_THROWS_AS(nearest_irregular(N, {false, false, false}, 0), Error);
}

TEST_CASE("is_monotone") {
  const auto g = gen_grid(3);
  const std::vector<VertexId> bottom{0, 1, 2};
  CHECK(is_monotone(g, bottom));
  const auto sq = square();
  const std::vector<VertexId> around{0, 3, 2, 1};
  CHECK_FALSE(is_monotone(sq, around));
  const std::vector<VertexId> gap{0, 2};
  CHECK_FALSE(is_monotone(g, gap));
  const auto strip = gen_rhombus_strip(3, 0.05, 0.02);
  const std::vector<VertexId> rail_a{0, 1, 2, 3};
  CHECK(is_monotone(strip, rail_a));
}

TEST_CASE("convexity number") {
  // Pairs i < j whose left edge has the smaller slope.
  CHECK(convexity_number(std::vector<double>{}) == 0);
  CHECK(convexity_number(std::vector<double>{0.3}) == 0);
  CHECK(convexity_number(std::vector<double>{-0.1, 0.0, 0.1}) == 3);
  CHECK(convexity_number(std::vector<double>{0.1, 0.0, -0.1}) == 0);
  CHECK(convexity_number(std::vector<double>{0.0, 0.0, 0.0}) == 0);
  CHECK(convexity_number(std::vector<double>{0.0, 1.0, 0.5}) == 2);

  const auto g = hat1();
  const std::vector<VertexId> lower{0, 1, 3}, upper{0, 2, 3};
  CHECK(convexity_number(g, lower) == 1);
  CHECK(convexity_number(g, upper) == 0);  // a hat replacement drops it by one
  const std::vector<VertexId> bad{0, 3};
  CHECK_THROWS_AS(convexity_number(g, bad), Error);
}

TEST_CASE("hull and find_hat") {
  Frame one(hat1(), 0, 1);
  const std::vector<VertexId> lower{0, 1, 3};
  auto hat = find_hat(one.g, one.frame, lower);
  REQUIRE(hat);
  const auto& h = one.frame.hull(*hat);
  CHECK(h.left == 0);
  CHECK(h.bottom == 1);
  CHECK(h.top == 2);
  CHECK(h.right == 3);
  CHECK(one.frame.at(1).y == doctest::Approx(0).epsilon(1e-12));  // alpha is horizontal
  const std::vector<VertexId> upper{0, 2, 3};
  CHECK_FALSE(find_hat(one.g, one.frame, upper));

  Frame two(hat2(), 0, 1);
  const std::vector<VertexId> path{0, 1, 3, 4, 6};
  hat = find_hat(two.g, two.frame, path);
  REQUIRE(hat);
  CHECK(two.frame.hull(*hat).left == 0);
  const std::vector<VertexId> right_half{0, 2, 3, 4, 6};
  hat = find_hat(two.g, two.frame, right_half);
  REQUIRE(hat);
  CHECK(two.frame.hull(*hat).left == 3);

  Frame line(MatchstickGraph({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}}), 0, 1);
  const std::vector<VertexId> straight{0, 1, 2};
  CHECK_FALSE(find_hat(line.g, line.frame, straight));
  const std::vector<VertexId> backwards{2, 1, 0};
  CHECK_THROWS_AS(find_hat(line.g, line.frame, backwards), Error);
}

TEST_CASE("ambiguous hull") {
  Frame sq(square(), 0, 1);
  for (FaceId f = 0; f < sq.fd.num_faces(); ++f) {
    if (sq.frame.rhombic(f)) CHECK_THROWS_AS(sq.frame.hull(f), Error);
  }
}

TEST_CASE("extend_path: immediate stop") {
  const MatchstickGraph p3({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {{0, 1}, {1, 2}, {2, 3}});
  const auto t = extend_path(p3, 1, 1.0);
  CHECK(t.result == PathResult::found_irregular);
  CHECK(t.irregular_edge == EdgeId{1});
  CHECK(t.final_path == std::vector<VertexId>{1, 2});
  CHECK(t.steps == 1);
  CHECK(t.hats == 0);
  CHECK(t.within_step_bound());
}

TEST_CASE("extend_path: strip fixture") {
  const auto s = gen_rhombus_strip(3, 0.05, 0.02);
  for (EdgeId alpha = 0; alpha < s.num_edges(); ++alpha) {
    const auto t = extend_path(s, alpha, 1.0);
    CHECK(t.result == PathResult::found_irregular);
    CHECK(t.steps <= 12);
    CHECK(t.within_step_bound());
    REQUIRE(t.irregular_edge);
  }
}

TEST_CASE("extend_path: errors") {
  CHECK_THROWS_AS(extend_path(square(), 0, 1.0), Error);  // fat
  const MatchstickGraph tri({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}, {{0, 1}, {1, 2}, {0, 2}});
  try {
    extend_path(tri, 0, 5.0);
    FAIL("expected NotReduced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotReduced);
  }
  CHECK_THROWS_AS(extend_path(gen_rhombus_strip(2, 0.05), 99, 1.0), Error);
  CHECK_THROWS_AS(extend_path(gen_rhombus_strip(2, 0.05), 0, 0.0), Error);
}

TEST_CASE("extend_path: reduced disk lattice, per-event accounting") {
  const double r = 2.5;
  const auto G = reduce(gen_disk_lattice(r, 150).graph, r).after_fat_rhombi;
  const auto core = drop_isolated(G).graph;
  const auto fd = enumerate_faces(core);
  const auto cls = classify_faces(core, fd, r);
  const auto ir = irregular_edge_count(core, fd, cls);
  std::vector<EdgeId> pool;
  for (EdgeId e = 0; e < core.num_edges(); ++e) {
    if (!ir.irregular[e]) pool.push_back(e);
  }
  if (pool.empty()) {
    for (EdgeId e = 0; e < core.num_edges(); ++e) pool.push_back(e);
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int run = 0; run < 20; ++run) {
    const EdgeId alpha = pool[pick(rng)];
    const auto t = extend_path(G, alpha, r);
    CHECK(t.result == PathResult::found_irregular);
    CHECK(t.within_step_bound());
    for (const auto& ev : t.events) {
      if (ev.kind == PathEventKind::hat_replaced) CHECK(ev.c_after == ev.c_before - 1);
    }
    const auto j = to_json(t);
    CHECK(j["result"] == "found_irregular");
  }
}
