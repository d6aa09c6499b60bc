#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "matchstick/error.hpp"
#include "matchstick/generators.hpp"
#include "matchstick/io.hpp"
#include "matchstick/validate.hpp"

using namespace matchstick;

namespace {

MatchstickGraph square() {
  return MatchstickGraph({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

MatchstickGraph triangle() {
  return MatchstickGraph({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("validate: square passes everything") {
  const auto rep = validate(square(), {});
  CHECK(rep.ok());
  for (Check c : {Check::unit_lengths, Check::noncrossing, Check::simple, Check::connected,
                  Check::triangle_free}) {
    CHECK(rep[c] == CheckStatus::pass);
  }
  CHECK(rep[Check::disk_contained] == CheckStatus::skipped);
  CHECK(rep.violations.empty());
}

TEST_CASE("validate: triangle is not triangle-free") {
  const auto rep = validate(triangle(), {}, {Check::triangle_free});
  CHECK(rep[Check::triangle_free] == CheckStatus::fail);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(rep[Check::unit_lengths] == CheckStatus::skipped);
}

TEST_CASE("validate: crossing, simple and disk violations") {
  MatchstickGraph cross({{0, 0}, {1, 0}, {0.5, -0.5}, {0.5, 0.5}}, {{0, 1}, {2, 3}});
  auto rep = validate(cross, {});
  CHECK(rep[Check::noncrossing] == CheckStatus::fail);
  CHECK(rep[Check::connected] == CheckStatus::fail);

  MatchstickGraph dup({{0, 0}, {1, 0}}, {{0, 1}, {1, 0}});
  CHECK(validate(dup, {}, {Check::simple})[Check::simple] == CheckStatus::fail);
  MatchstickGraph loop({{0, 0}, {1, 0}}, {{0, 0}});
  CHECK(validate(loop, {}, {Check::simple})[Check::simple] == CheckStatus::fail);
  MatchstickGraph twin({{0, 0}, {0, 0}}, {});
  CHECK(validate(twin, {}, {Check::simple})[Check::simple] == CheckStatus::fail);
  MatchstickGraph range({{0, 0}}, {{0, 3}});
  CHECK(validate(range, {}, {Check::simple})[Check::simple] == CheckStatus::fail);

  const auto g = gen_grid(3).with_disk(DiskSpec{{0, 0}, 1.0});
  CHECK(validate(g, {}, {Check::disk_contained})[Check::disk_contained] == CheckStatus::fail);
  CHECK(validate(g.with_disk(DiskSpec{{0, 0}, 2.0}), {}, {Check::disk_contained}).ok());
}

TEST_CASE("degree_profile") {
  auto p = degree_profile(MatchstickGraph({{0, 0}, {1, 0}}, {{0, 1}}));
  CHECK(p.histogram == std::map<std::size_t, std::size_t>{{1, 2}});
  CHECK(p.connected);

  // 7x7 grid: corners have degree 2, the rest of the rim 3, the inside 4.
  p = degree_profile(gen_grid(7));
  CHECK(p.histogram == std::map<std::size_t, std::size_t>{{2, 4}, {3, 4 * 5}, {4, 5 * 5}});
  CHECK(p.connected);

  p = degree_profile(MatchstickGraph({{0, 0}, {1, 0}, {0, 2}, {1, 2}}, {{0, 1}, {2, 3}}));
  CHECK(p.histogram == std::map<std::size_t, std::size_t>{{1, 4}});
  CHECK_FALSE(p.connected);
}

TEST_CASE("remove_edges") {
  auto path = remove_edges(square(), {3});
  CHECK(path.num_vertices() == 4);
  CHECK(path.num_edges() == 3);

  auto tri = remove_edges(triangle(), {0});
  CHECK(tri.num_edges() == 2);
  CHECK(validate(tri, {}, {Check::triangle_free}).ok());

  // grid(3): the top edges of the four cells are the horizontal edges of
  // rows 1 and 2.
  const auto g = gen_grid(3);
  std::vector<EdgeId> tops;
  for (VertexId j : {1u, 2u}) {
    for (VertexId i : {0u, 1u}) tops.push_back(*g.find_edge(j * 3 + i, j * 3 + i + 1));
  }
  const auto h = remove_edges(g, tops);
  CHECK(g.num_edges() == 12);
  CHECK(h.num_edges() == 8);
  CHECK(validate(h, {}, kMatchstickChecks).ok());

  CHECK_THROWS_AS(remove_edges(square(), {4}), Error);
}

TEST_CASE("validation is monotone under edge removal") {
  const auto g = gen_triangle_free(30);
  const auto before = validate(g, {});
  for (EdgeId e = 0; e < g.num_edges(); e += 7) {
    const auto after = validate(remove_edges(g, {e}), {});
    for (const auto& [c, s] : before.status) {
      if (s == CheckStatus::pass && c != Check::connected) CHECK(after[c] == CheckStatus::pass);
    }
  }
}

TEST_CASE("drop_isolated keeps edge ids") {
  MatchstickGraph g({{5, 5}, {0, 0}, {1, 0}, {7, 7}, {1, 1}}, {{1, 2}, {2, 4}});
  const auto core = drop_isolated(g);
  CHECK(core.isolated == 2);
  CHECK(core.graph.num_vertices() == 3);
  CHECK(core.original == std::vector<VertexId>{1, 2, 4});
  CHECK(core.graph.num_edges() == 2);
  CHECK(core.graph.edge(1).v == 2);
}

TEST_CASE("json round trip is bit-exact") {
  const auto lattice = gen_disk_lattice(3, 40).graph;
  for (const auto& g : {lattice, gen_zonotope(7), gen_rhombus_strip(3, 0.05, 0.02)}) {
    const std::string text = to_json_text(g);
    const auto back = graph_from_json_text(text);
    CHECK(back == g);
    CHECK(to_json_text(back) == text);
  }
  const auto path = std::filesystem::temp_directory_path() / "matchstick_roundtrip.json";
  save_graph(lattice, path);
  CHECK(load_graph(path) == lattice);
  std::filesystem::remove(path);
}

TEST_CASE("json reader is strict") {
  auto bad = [](const char* text) {
    try {
      graph_from_json_text(text);
    } catch (const Error& e) {
      return e.code() == ErrorCode::FormatError;
    }
    return false;
  };
  CHECK(bad(R"({"version":2,"disk":null,"vertices":[],"edges":[]})"));
  CHECK(bad(R"({"version":1,"disk":null,"vertices":[],"edges":[],"extra":1})"));
  CHECK(bad(R"({"version":1,"disk":null,"vertices":[[0,0],[1,0]],"edges":[[1,0]]})"));
  CHECK(bad(R"({"version":1,"disk":null,"vertices":[[0,0],[1,0]],"edges":[[0,2]]})"));
  CHECK(bad(R"({"version":1,"disk":null,"vertices":[[0,0],[1,0],[2,0]],"edges":[[1,2],[0,1]]})"));
  CHECK(bad(R"({"version":1,"disk":{"radius":-1},"vertices":[],"edges":[]})"));
  CHECK(bad(R"({"version":1,"disk":{"radius":1,"colour":2},"vertices":[],"edges":[]})"));
  CHECK(bad("not json"));
  const auto g = graph_from_json_text(
      R"({"version":1,"disk":{"radius":2},"vertices":[[0,0],[1,0]],"edges":[[0,1]]})");
  REQUIRE(g.disk());
  CHECK(g.disk()->center == Point{0, 0});
  CHECK(g.disk()->radius == 2.0);
}
