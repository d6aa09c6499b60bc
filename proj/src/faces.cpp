#include "matchstick/faces.hpp"

#include <algorithm>
#include <numbers>
#include <set>

#include "matchstick/error.hpp"

namespace matchstick {

std::string_view to_string(FaceKind k) {
  switch (k) {
    case FaceKind::triangle: return "triangle";
    case FaceKind::rhombus: return "rhombus";
    case FaceKind::fat_rhombus: return "fat_rhombus";
    case FaceKind::other: return "other";
    case FaceKind::outer: return "outer";
  }
  return "unknown";
}

RotationSystem rotation_system(const MatchstickGraph& g, const TolerancePolicy& pol) {
  RotationSystem rs;
  rs.outgoing.resize(g.num_vertices());
  rs.position.assign(2 * g.num_edges(), 0);
  std::vector<double> angle(2 * g.num_edges());
  for (HalfEdgeId h = 0; h < 2 * g.num_edges(); ++h) {
    angle[h] = direction_angle(g.vertex(tail(g, h)), g.vertex(head(g, h)), pol);
    rs.outgoing[tail(g, h)].push_back(h);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto& out = rs.outgoing[v];
    std::sort(out.begin(), out.end(), [&](HalfEdgeId a, HalfEdgeId b) {
      return angle[a] != angle[b] ? angle[a] < angle[b] : a < b;
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
      rs.position[out[i]] = static_cast<std::uint32_t>(i);
      if (out.size() < 2) continue;
      const HalfEdgeId next = out[(i + 1) % out.size()];
      double gap = angle[next] - angle[out[i]];
      if (i + 1 == out.size()) gap += 2 * std::numbers::pi;
      if (gap <= pol.geom_tol) {
        throw Error(ErrorCode::AmbiguousAngles,
                    "edges " + std::to_string(edge_of(out[i])) + " and " +
                        std::to_string(edge_of(next)) + " leave vertex " + std::to_string(v) +
                        " in the same direction");
      }
    }
  }
  return rs;
}

FaceDecomposition enumerate_faces(const MatchstickGraph& g, const TolerancePolicy& pol) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::InvalidArgument, "empty graph has no faces");
  if (connected_components(g).size() != 1) {
    throw Error(ErrorCode::Disconnected, "faces are only defined for connected drawings");
  }
  FaceDecomposition fd;
  if (g.num_edges() == 0) {
    fd.faces.push_back({});
    fd.boundary_length.push_back(0);
    fd.signed_area.push_back(0.0);
    fd.f[0] = 1;
    return fd;
  }

  const RotationSystem rs = rotation_system(g, pol);
  const auto half_count = static_cast<HalfEdgeId>(2 * g.num_edges());
  constexpr FaceId kNone = ~FaceId{0};
  fd.face_of.assign(half_count, kNone);
  for (HalfEdgeId start = 0; start < half_count; ++start) {
    if (fd.face_of[start] != kNone) continue;
    const auto id = static_cast<FaceId>(fd.faces.size());
    std::vector<HalfEdgeId> walk;
    double area2 = 0.0;
    HalfEdgeId h = start;
    do {
      fd.face_of[h] = id;
      walk.push_back(h);
      const Point a = g.vertex(tail(g, h));
      const Point b = g.vertex(head(g, h));
      area2 += cross(a, b);
      // Next edge: the one just clockwise of the reverse at the head.
      const auto& ring = rs.outgoing[head(g, h)];
      const std::uint32_t pos = rs.position[twin(h)];
      h = ring[(pos + ring.size() - 1) % ring.size()];
    } while (h != start);
    fd.boundary_length.push_back(walk.size());
    fd.signed_area.push_back(area2 / 2);
    ++fd.f[walk.size()];
    fd.faces.push_back(std::move(walk));
  }
  fd.outer_face = static_cast<FaceId>(
      std::min_element(fd.signed_area.begin(), fd.signed_area.end()) - fd.signed_area.begin());
  return fd;
}

double fat_threshold(double r) { return std::numbers::pi / (50.0 * r * r); }

std::vector<VertexId> face_vertices(const MatchstickGraph& g, const FaceDecomposition& fd,
                                    FaceId f) {
  std::vector<VertexId> out;
  out.reserve(fd.faces[f].size());
  for (HalfEdgeId h : fd.faces[f]) out.push_back(tail(g, h));
  if (out.empty() && g.num_vertices() == 1) out.push_back(0);
  return out;
}

std::vector<EdgeId> face_edges(const FaceDecomposition& fd, FaceId f) {
  std::vector<EdgeId> out;
  out.reserve(fd.faces[f].size());
  for (HalfEdgeId h : fd.faces[f]) out.push_back(edge_of(h));
  return out;
}

std::vector<FaceClass> classify_faces(const MatchstickGraph& g, const FaceDecomposition& fd,
                                      std::optional<double> r, const TolerancePolicy& pol) {
  std::vector<FaceClass> out(fd.num_faces());
  for (FaceId f = 0; f < fd.num_faces(); ++f) {
    if (f == fd.outer_face) {
      out[f].kind = FaceKind::outer;
      continue;
    }
    const auto vs = face_vertices(g, fd, f);
    const auto es = face_edges(fd, f);
    const std::set<VertexId> dv(vs.begin(), vs.end());
    const std::set<EdgeId> de(es.begin(), es.end());
    if (vs.size() == 3 && dv.size() == 3) {
      out[f].kind = FaceKind::triangle;
    } else if (vs.size() == 4 && dv.size() == 4 && de.size() == 4) {
      try {
        const double theta = rhombus_small_angle(g.vertex(vs[0]), g.vertex(vs[1]),
                                                 g.vertex(vs[2]), g.vertex(vs[3]), pol);
        out[f].small_angle = theta;
        out[f].kind = (r && theta >= fat_threshold(*r)) ? FaceKind::fat_rhombus
                                                        : FaceKind::rhombus;
      } catch (const Error&) {
        // Not unit-sided: an unvalidated drawing. Leave it as "other".
      }
    }
  }
  return out;
}

}  // namespace matchstick
