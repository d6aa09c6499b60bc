#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchstick/faces.hpp"
#include "matchstick/graph.hpp"
#include "matchstick/kernels.hpp"

namespace matchstick {

/// Graph on the edges of a drawing: two edges are adjacent when they lie
/// on a common face. Stored as edge/face incidence; BFS goes edge -> face
/// -> edge.
struct NeighborhoodGraph {
  kernels::Incidence incidence;  // node = edge, group = face

  std::size_t num_nodes() const { return incidence.groups_of_node.size(); }
  /// Neighbors of `e` with the smallest face realizing each adjacency.
  std::vector<std::pair<EdgeId, FaceId>> neighbors(EdgeId e) const;
};

/// Isolated vertices are ignored; the rest must be connected.
NeighborhoodGraph build_neighborhood(const MatchstickGraph& g, const TolerancePolicy& pol = {});
NeighborhoodGraph build_neighborhood(const FaceDecomposition& fd, std::size_t num_edges);

/// Hop distance in N. Throws Unreachable.
std::int64_t edge_distance(const NeighborhoodGraph& N, EdgeId a, EdgeId b);

struct NearestIrregular {
  EdgeId edge = 0;
  std::int64_t distance = 0;
};

/// Closest irregular edge to `e` (smallest id among the closest). Throws
/// Unreachable when none can be reached.
NearestIrregular nearest_irregular(const NeighborhoodGraph& N, const std::vector<bool>& irregular,
                                   EdgeId e);

/// Distance from every edge to its nearest irregular edge (-1 if none).
std::vector<std::int64_t> irregular_distances(const NeighborhoodGraph& N,
                                              const std::vector<bool>& irregular);

/// True iff consecutive vertices are adjacent and x strictly increases
/// (by more than geom_tol).
bool is_monotone(const MatchstickGraph& g, std::span<const VertexId> path,
                 const TolerancePolicy& pol = {});

/// Number of pairs i < j where edge i has smaller slope than edge j (by
/// more than `tol`). A hat replacement lowers it by exactly one.
std::int64_t convexity_number(std::span<const double> slopes, double tol = 1e-9);
/// Throws NotMonotone.
std::int64_t convexity_number(const MatchstickGraph& g, std::span<const VertexId> path,
                              const TolerancePolicy& pol = {});

struct RhombusHull {
  VertexId left = 0, bottom = 0, right = 0, top = 0;
  EdgeId lower_left = 0, lower_right = 0, upper_left = 0, upper_right = 0;
};

/// Coordinates of a drawing rotated so that a chosen edge is horizontal,
/// plus the lower/upper hull of every rhombic face in that frame.
class PathFrame {
 public:
  /// Rotates by the smallest angle that makes `alpha` horizontal.
  PathFrame(const MatchstickGraph& g, const FaceDecomposition& fd,
            const std::vector<FaceClass>& classes, EdgeId alpha, const TolerancePolicy& pol = {});

  double rotation() const { return rotation_; }
  Point at(VertexId v) const { return pts_[v]; }
  double slope(VertexId a, VertexId b) const;
  /// The face above the edge: the one walking it from lower x to higher x.
  FaceId face_above(VertexId a, VertexId b) const;
  bool rhombic(FaceId f) const;
  /// Throws AmbiguousHull when the x-coordinates are not distinct.
  const RhombusHull& hull(FaceId f) const;

 private:
  const MatchstickGraph& g_;
  const FaceDecomposition& fd_;
  const std::vector<FaceClass>& classes_;
  TolerancePolicy pol_;
  double rotation_ = 0.0;
  std::vector<Point> pts_;
  mutable std::vector<std::optional<RhombusHull>> hulls_;
};

/// Leftmost rhombic face whose lower-left and lower-right edges are
/// consecutive on the path. Throws NotMonotone.
std::optional<FaceId> find_hat(const MatchstickGraph& g, const PathFrame& frame,
                               std::span<const VertexId> path, const TolerancePolicy& pol = {});

enum class PathEventKind { hat_replaced, extended_left, extended_right, stopped_irregular };
std::string_view to_string(PathEventKind k);

struct PathEvent {
  PathEventKind kind = PathEventKind::hat_replaced;
  std::size_t phase = 0;            // i of Step (i, *)
  std::optional<FaceId> face;
  std::optional<EdgeId> edge;
  std::int64_t c_before = 0;
  std::int64_t c_after = 0;
  std::vector<VertexId> path;       // after the event
};

enum class PathResult { found_irregular, exhausted };

struct ExtendPathTrace {
  EdgeId alpha = 0;
  double rotation = 0.0;
  std::vector<PathEvent> events;
  std::vector<std::size_t> s;       // s[i] = hat replacements in phase i
  std::size_t hats = 0;
  std::size_t scans = 0;
  std::size_t steps = 0;            // hats + scans
  PathResult result = PathResult::exhausted;
  std::optional<EdgeId> irregular_edge;
  std::vector<VertexId> final_path;
  std::size_t final_length = 0;
  std::string exhausted_reason;

  /// steps <= l(l+1)/2 + l.
  bool within_step_bound() const;
};

/// Runs the path-extension procedure from edge `alpha` of a reduced
/// drawing. Vertex ids in the trace are those of `g`. Throws NotReduced,
/// AmbiguousHull, UnknownEdge, and InvariantViolation if a hat fails to
/// lower the convexity number by one, an extension raises it by more than
/// (length - 1), or a rightsided edge follows a leftsided one in a scan.
/// max_steps = 0 means n(n+1).
ExtendPathTrace extend_path(const MatchstickGraph& g, EdgeId alpha, double r,
                            std::size_t max_steps = 0, const TolerancePolicy& pol = {});

nlohmann::json to_json(const ExtendPathTrace& t);

}  // namespace matchstick
