#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "matchstick/geometry.hpp"
#include "matchstick/graph.hpp"

namespace matchstick {

// Half-edge 2e runs edge(e).u -> edge(e).v, half-edge 2e+1 the other way.
using HalfEdgeId = std::uint32_t;
using FaceId = std::uint32_t;

inline HalfEdgeId twin(HalfEdgeId h) { return h ^ 1u; }
inline EdgeId edge_of(HalfEdgeId h) { return h >> 1; }
inline VertexId tail(const MatchstickGraph& g, HalfEdgeId h) {
  const Edge e = g.edge(edge_of(h));
  return (h & 1u) ? e.v : e.u;
}
inline VertexId head(const MatchstickGraph& g, HalfEdgeId h) { return tail(g, twin(h)); }

struct RotationSystem {
  // Outgoing half-edges of every vertex in counterclockwise angular order.
  std::vector<std::vector<HalfEdgeId>> outgoing;
  // Index of each half-edge inside outgoing[tail].
  std::vector<std::uint32_t> position;
};

/// Throws AmbiguousAngles when two edges leave a vertex in the same
/// direction (within geom_tol).
RotationSystem rotation_system(const MatchstickGraph& g, const TolerancePolicy& pol = {});

struct FaceDecomposition {
  std::vector<std::vector<HalfEdgeId>> faces;  // each a closed walk
  std::vector<FaceId> face_of;                 // per half-edge
  std::vector<std::size_t> boundary_length;
  std::vector<double> signed_area;
  FaceId outer_face = 0;
  std::map<std::size_t, std::size_t> f;  // boundary length -> face count

  std::size_t num_faces() const { return faces.size(); }
};

/// Face walks of a connected drawing. Bounded faces come out
/// counterclockwise; the outer face is the one with minimum signed area
/// (the only one that is not positive). Throws Disconnected.
FaceDecomposition enumerate_faces(const MatchstickGraph& g, const TolerancePolicy& pol = {});

enum class FaceKind { triangle, rhombus, fat_rhombus, other, outer };
std::string_view to_string(FaceKind k);

struct FaceClass {
  FaceKind kind = FaceKind::other;
  std::optional<double> small_angle;

  bool rhombic() const { return kind == FaceKind::rhombus || kind == FaceKind::fat_rhombus; }
};

/// pi / (50 r^2); rhombi at or above this small angle are fat.
double fat_threshold(double r);

/// Per-face classes. Without `r` no face is ever fat.
std::vector<FaceClass> classify_faces(const MatchstickGraph& g, const FaceDecomposition& fd,
                                      std::optional<double> r = std::nullopt,
                                      const TolerancePolicy& pol = {});

std::vector<VertexId> face_vertices(const MatchstickGraph& g, const FaceDecomposition& fd,
                                    FaceId f);
std::vector<EdgeId> face_edges(const FaceDecomposition& fd, FaceId f);

}  // namespace matchstick
