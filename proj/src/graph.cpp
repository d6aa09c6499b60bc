#include "matchstick/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "matchstick/error.hpp"

namespace matchstick {

MatchstickGraph::MatchstickGraph(std::vector<Point> vertices, std::vector<Edge> edges,
                                 std::optional<DiskSpec> disk)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), disk_(disk) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<EdgeId> MatchstickGraph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

MatchstickGraph MatchstickGraph::with_disk(std::optional<DiskSpec> disk) const {
  MatchstickGraph copy = *this;
  copy.disk_ = disk;
  return copy;
}

std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency(const MatchstickGraph& g) {
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.num_vertices());
  const auto n = g.num_vertices();
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge e = g.edge(id);
    if (e.u >= n || e.v >= n) continue;
    adj[e.u].emplace_back(e.v, id);
    if (e.u != e.v) adj[e.v].emplace_back(e.u, id);
  }
  return adj;
}

MatchstickGraph remove_edges(const MatchstickGraph& g, const std::vector<EdgeId>& which) {
  std::vector<bool> drop(g.num_edges(), false);
  for (EdgeId id : which) {
    if (id >= g.num_edges()) {
      throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(id) + " out of range");
    }
    drop[id] = true;
  }
  std::vector<Edge> kept;
  kept.reserve(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (!drop[id]) kept.push_back(g.edge(id));
  }
  return MatchstickGraph(g.vertices(), std::move(kept), g.disk());
}

std::vector<std::vector<VertexId>> connected_components(const MatchstickGraph& g) {
  const auto adj = adjacency(g);
  std::vector<int> seen(g.num_vertices(), 0);
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto [w, id] : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

CoreGraph drop_isolated(const MatchstickGraph& g) {
  const auto adj = adjacency(g);
  CoreGraph out;
  std::vector<VertexId> new_id(g.num_vertices(), 0);
  std::vector<Point> pts;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (adj[v].empty()) {
      ++out.isolated;
      continue;
    }
    new_id[v] = static_cast<VertexId>(pts.size());
    out.original.push_back(v);
    pts.push_back(g.vertex(v));
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({new_id[e.u], new_id[e.v]});
  out.graph = MatchstickGraph(std::move(pts), std::move(edges), g.disk());
  return out;
}

bool lexicographically_less(const MatchstickGraph& a, const MatchstickGraph& b) {
  auto key = [](const Point& p) { return std::tie(p.x, p.y); };
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  const bool vless = std::lexicographical_compare(
      va.begin(), va.end(), vb.begin(), vb.end(),
      [&](const Point& p, const Point& q) { return key(p) < key(q); });
  if (vless) return true;
  const bool vgreater = std::lexicographical_compare(
      vb.begin(), vb.end(), va.begin(), va.end(),
      [&](const Point& p, const Point& q) { return key(p) < key(q); });
  if (vgreater) return false;
  return a.edges() < b.edges();
}

}  // namespace matchstick
