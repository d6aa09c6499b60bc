#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "matchstick/graph.hpp"

namespace matchstick {

// Edge ids in a phase refer to the graph that phase started from: the input
// for triangles, the triangle-free result for fat rhombi.
struct StripResult {
  MatchstickGraph graph;
  std::vector<EdgeId> removed;
  std::size_t initial_faces = 0;  // offending faces before the first removal
  std::size_t passes = 0;
};

/// Removes the smallest edge of every triangular face until none is left.
StripResult strip_triangles(const MatchstickGraph& g, const TolerancePolicy& pol = {});

/// Same for rhombic faces with small angle >= pi/(50 r^2). Throws
/// MissingRadius without r and NonpositiveRadius for r <= 0.
StripResult strip_fat_rhombi(const MatchstickGraph& g, std::optional<double> r,
                             const TolerancePolicy& pol = {});

struct ReductionTrace {
  double r = 0.0;
  MatchstickGraph input_graph;
  MatchstickGraph after_triangles;
  MatchstickGraph after_fat_rhombi;
  std::vector<EdgeId> removed_for_triangles;
  std::vector<EdgeId> removed_for_fat;
  std::size_t triangle_face_count = 0;
  std::size_t fat_rhombus_count = 0;
  bool disk_contained = false;   // caps below only bind for disk-contained input
  bool triangle_cap_ok = false;  // triangles < 8 r^2
  bool fat_cap_ok = false;       // fat rhombi <= 100 r^4
  bool edge_cap_ok = false;      // e(G) <= e(G'') + 100 r^4 + 8 r^2
};

/// Both phases. Throws InvariantViolation if the edge cap fails.
ReductionTrace reduce(const MatchstickGraph& g, double r, const TolerancePolicy& pol = {});

/// Counts and flags only; the graphs are written separately.
nlohmann::json to_json(const ReductionTrace& t);

}  // namespace matchstick
