#pragma once

// Data-parallel inner loops. Each kernel has a straightforward serial
// reference and an OpenMP version; both return identical, sorted results
// and the tests hold them against each other.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "matchstick/geometry.hpp"
#include "matchstick/graph.hpp"

namespace matchstick::kernels {

struct CrossingPair {
  EdgeId a = 0;  // a < b
  EdgeId b = 0;
  SegmentRelation relation = SegmentRelation::disjoint;

  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

/// All edge pairs whose segments cross, overlap or touch an interior.
/// Edges with out-of-range or coincident endpoints are ignored.
std::vector<CrossingPair> crossing_pairs_serial(const MatchstickGraph& g,
                                                const TolerancePolicy& pol);
std::vector<CrossingPair> crossing_pairs_parallel(const MatchstickGraph& g,
                                                  const TolerancePolicy& pol);

using VertexPair = std::pair<VertexId, VertexId>;

/// All pairs i < j with lo <= |p_i - p_j| <= hi.
std::vector<VertexPair> distance_window_pairs_serial(std::span<const Point> pts, double lo,
                                                     double hi);
std::vector<VertexPair> distance_window_pairs_parallel(std::span<const Point> pts, double lo,
                                                       double hi);

/// Bipartite incidence between nodes and groups (edges and faces of a
/// plane graph). Two nodes are adjacent iff they share a group.
struct Incidence {
  std::vector<std::vector<std::uint32_t>> groups_of_node;
  std::vector<std::vector<std::uint32_t>> nodes_of_group;
};

/// For every node, the hop distance to the nearest target node (-1 when
/// no target is reachable).
std::vector<std::int64_t> nearest_target_serial(const Incidence& inc,
                                                const std::vector<bool>& target);
std::vector<std::int64_t> nearest_target_parallel(const Incidence& inc,
                                                  const std::vector<bool>& target);
std::vector<std::int64_t> nearest_target_multisource(const Incidence& inc,
                                                     const std::vector<bool>& target);

/// Best n-cell subset of a width x width block of the integer lattice,
/// scored by the number of unit lattice edges it induces. Cells are
/// numbered row-major; `cells` is the lexicographically smallest optimum
/// among the subsets evaluated.
struct WindowBest {
  int edges = -1;
  std::vector<int> cells;
  std::uint64_t evaluated = 0;
  bool complete = false;
};

std::uint64_t binomial(int n, int k);
WindowBest best_window_subset_serial(int width, int n, std::uint64_t budget);
WindowBest best_window_subset_parallel(int width, int n, std::uint64_t budget);

}  // namespace matchstick::kernels
