#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchstick/geometry.hpp"

namespace matchstick {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge; stored with u <= v once inside a MatchstickGraph.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DiskSpec {
  Point center;
  double radius = 1.0;

  friend bool operator==(const DiskSpec&, const DiskSpec&) = default;
};

/// A straight-line drawing: vertex coordinates plus an edge list.
///
/// The object is immutable and may hold raw, unvalidated data; `validate`
/// decides whether it is a matchstick graph. Edges are normalized to u <= v
/// and sorted lexicographically, so an EdgeId is the rank of its endpoint
/// pair and "lexicographically smallest edge" means "smallest id".
class MatchstickGraph {
 public:
  MatchstickGraph() = default;
  MatchstickGraph(std::vector<Point> vertices, std::vector<Edge> edges,
                  std::optional<DiskSpec> disk = std::nullopt);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Point vertex(VertexId v) const { return vertices_[v]; }
  Edge edge(EdgeId e) const { return edges_[e]; }
  const std::optional<DiskSpec>& disk() const { return disk_; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  MatchstickGraph with_disk(std::optional<DiskSpec> disk) const;

  friend bool operator==(const MatchstickGraph&, const MatchstickGraph&) = default;

 private:
  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  std::optional<DiskSpec> disk_;
};

/// Per-vertex list of (neighbor, edge id). Edges with out-of-range
/// endpoints are skipped.
std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency(const MatchstickGraph& g);

/// Same vertex set, edge set minus `which`. Throws UnknownEdge.
MatchstickGraph remove_edges(const MatchstickGraph& g, const std::vector<EdgeId>& which);

/// Vertex sets of the connected components, each sorted, ordered by
/// smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const MatchstickGraph& g);

/// `g` without its isolated vertices. Remaining vertices keep their relative
/// order, so edge ids are unchanged. `original[i]` is the id in `g`.
struct CoreGraph {
  MatchstickGraph graph;
  std::vector<VertexId> original;
  std::size_t isolated = 0;
};
CoreGraph drop_isolated(const MatchstickGraph& g);

/// Strict weak order on drawings used for deterministic tie-breaking.
bool lexicographically_less(const MatchstickGraph& a, const MatchstickGraph& b);

}  // namespace matchstick
