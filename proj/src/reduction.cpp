#include "matchstick/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "matchstick/error.hpp"
#include "matchstick/faces.hpp"
#include "matchstick/validate.hpp"

namespace matchstick {

namespace {

template <class Offending>
StripResult strip(const MatchstickGraph& g, std::optional<double> r, const TolerancePolicy& pol,
                  Offending offending) {
  StripResult out;
  out.graph = g;
  bool first = true;
  while (true) {
    const CoreGraph core = drop_isolated(out.graph);
    if (core.graph.num_edges() == 0) break;
    const auto fd = enumerate_faces(core.graph, pol);
    const auto classes = classify_faces(core.graph, fd, r, pol);
    std::vector<std::vector<EdgeId>> bad;
    for (FaceId f = 0; f < fd.num_faces(); ++f) {
      if (!offending(classes[f].kind)) continue;
      auto es = face_edges(fd, f);
      std::sort(es.begin(), es.end());
      bad.push_back(std::move(es));
    }
    if (first) out.initial_faces = bad.size();
    first = false;
    if (bad.empty()) break;
    ++out.passes;
    std::sort(bad.begin(), bad.end());
    std::vector<bool> gone(out.graph.num_edges(), false);
    std::vector<EdgeId> now;
    for (const auto& es : bad) {
      if (std::any_of(es.begin(), es.end(), [&](EdgeId e) { return gone[e]; })) continue;
      gone[es.front()] = true;
      now.push_back(es.front());
    }
    for (EdgeId e : now) {
      const Edge ed = out.graph.edge(e);
      out.removed.push_back(*g.find_edge(ed.u, ed.v));
    }
    out.graph = remove_edges(out.graph, now);
  }
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

void require_radius(std::optional<double> r) {
  if (!r) throw Error(ErrorCode::MissingRadius, "fat rhombi are only defined for a radius");
  if (!(*r > 0) || !std::isfinite(*r)) {
    throw Error(ErrorCode::NonpositiveRadius, "radius must be positive");
  }
}

}  // namespace

StripResult strip_triangles(const MatchstickGraph& g, const TolerancePolicy& pol) {
  return strip(g, std::nullopt, pol, [](FaceKind k) { return k == FaceKind::triangle; });
}

StripResult strip_fat_rhombi(const MatchstickGraph& g, std::optional<double> r,
                             const TolerancePolicy& pol) {
  require_radius(r);
  return strip(g, r, pol, [](FaceKind k) { return k == FaceKind::fat_rhombus; });
}

ReductionTrace reduce(const MatchstickGraph& g, double r, const TolerancePolicy& pol) {
  require_radius(r);
  ReductionTrace t;
  t.r = r;
  t.input_graph = g;
  auto tri = strip_triangles(g, pol);
  auto fat = strip_fat_rhombi(tri.graph, r, pol);
  t.after_triangles = tri.graph;
  t.after_fat_rhombi = fat.graph;
  t.removed_for_triangles = std::move(tri.removed);
  t.removed_for_fat = std::move(fat.removed);
  t.triangle_face_count = tri.initial_faces;
  t.fat_rhombus_count = fat.initial_faces;

  const auto disk_graph = g.with_disk(DiskSpec{g.disk() ? g.disk()->center : Point{}, r});
  t.disk_contained =
      validate(disk_graph, pol, {Check::disk_contained})[Check::disk_contained] == CheckStatus::pass;
  const double r2 = r * r;
  t.triangle_cap_ok = static_cast<double>(t.triangle_face_count) < 8 * r2;
  t.fat_cap_ok = static_cast<double>(t.fat_rhombus_count) <= 100 * r2 * r2;
  t.edge_cap_ok = static_cast<double>(g.num_edges()) <=
                  static_cast<double>(t.after_fat_rhombi.num_edges()) + 100 * r2 * r2 + 8 * r2;
  if (!t.edge_cap_ok) {
    throw Error(ErrorCode::InvariantViolation, "e(G) exceeds e(G'') + 100r^4 + 8r^2");
  }
  return t;
}

nlohmann::json to_json(const ReductionTrace& t) {
  return {
      {"r", t.r},
      {"e_input", t.input_graph.num_edges()},
      {"e_after_triangles", t.after_triangles.num_edges()},
      {"e_after_fat_rhombi", t.after_fat_rhombi.num_edges()},
      {"removed_for_triangles", t.removed_for_triangles},
      {"removed_for_fat", t.removed_for_fat},
      {"triangle_face_count", t.triangle_face_count},
      {"fat_rhombus_count", t.fat_rhombus_count},
      {"disk_contained", t.disk_contained},
      {"triangle_cap_ok", t.triangle_cap_ok},
      {"fat_cap_ok", t.fat_cap_ok},
      {"edge_cap_ok", t.edge_cap_ok},
  };
}

}  // namespace matchstick
