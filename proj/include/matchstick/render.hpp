#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "matchstick/faces.hpp"
#include "matchstick/graph.hpp"

namespace matchstick {

struct Arrow {
  Point from;
  Point to;
  std::string label;
};

struct RenderStyle {
  double scale = 60.0;          // pixels per unit length
  double vertex_radius = 3.0;   // pixels
  double margin = 20.0;         // pixels
  std::set<EdgeId> dashed;      // e.g. the augmentation edges
  bool face_colors = false;     // fill faces by class (needs a decomposition)
  bool disk_outline = false;    // draw the graph's disk, if it has one
  std::vector<Arrow> arrows;
  std::map<VertexId, std::string> labels;
};

/// Deterministic SVG 1.1; y points up in the drawing. `fd` may be null.
/// Throws InvalidArgument for a non-positive scale.
std::string render_svg(const MatchstickGraph& g, const FaceDecomposition* fd,
                       const RenderStyle& style = {});

}  // namespace matchstick
