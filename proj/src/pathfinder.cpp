#include "matchstick/pathfinder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "matchstick/error.hpp"

namespace matchstick {

std::vector<std::pair<EdgeId, FaceId>> NeighborhoodGraph::neighbors(EdgeId e) const {
  std::map<EdgeId, FaceId> best;
  for (std::uint32_t f : incidence.groups_of_node[e]) {
    for (std::uint32_t other : incidence.nodes_of_group[f]) {
      if (other == e) continue;
      auto [it, fresh] = best.emplace(other, f);
      if (!fresh) it->second = std::min(it->second, static_cast<FaceId>(f));
    }
  }
  return {best.begin(), best.end()};
}

NeighborhoodGraph build_neighborhood(const FaceDecomposition& fd, std::size_t num_edges) {
  NeighborhoodGraph N;
  N.incidence.groups_of_node.resize(num_edges);
  N.incidence.nodes_of_group.resize(fd.num_faces());
  for (FaceId f = 0; f < fd.num_faces(); ++f) {
    auto es = face_edges(fd, f);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (EdgeId e : es) {
      N.incidence.nodes_of_group[f].push_back(e);
      N.incidence.groups_of_node[e].push_back(f);
    }
  }
  return N;
}

NeighborhoodGraph build_neighborhood(const MatchstickGraph& g, const TolerancePolicy& pol) {
  const CoreGraph core = drop_isolated(g);
  if (core.graph.num_vertices() == 0) return {};
  return build_neighborhood(enumerate_faces(core.graph, pol), g.num_edges());
}

namespace {

// Level-by-level BFS from `source`; stops at the first level where `stop`
// accepts a node and returns the smallest such node with its depth.
template <class Stop>
std::optional<NearestIrregular> bfs_first(const NeighborhoodGraph& N, EdgeId source, Stop stop) {
  if (source >= N.num_nodes()) throw Error(ErrorCode::UnknownEdge, "no such edge");
  if (stop(source)) return NearestIrregular{source, 0};
  const auto& inc = N.incidence;
  std::vector<bool> seen(N.num_nodes(), false), face_seen(inc.nodes_of_group.size(), false);
  std::vector<EdgeId> frontier{source}, next;
  seen[source] = true;
  for (std::int64_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    std::optional<EdgeId> hit;
    for (EdgeId v : frontier) {
      for (std::uint32_t f : inc.groups_of_node[v]) {
        if (face_seen[f]) continue;
        face_seen[f] = true;
        for (std::uint32_t w : inc.nodes_of_group[f]) {
          if (seen[w]) continue;
          seen[w] = true;
          next.push_back(w);
          if (stop(w) && (!hit || w < *hit)) hit = w;
        }
      }
    }
    if (hit) return NearestIrregular{*hit, depth};
    frontier.swap(next);
  }
  return std::nullopt;
}

}  // namespace

std::int64_t edge_distance(const NeighborhoodGraph& N, EdgeId a, EdgeId b) {
  if (b >= N.num_nodes()) throw Error(ErrorCode::UnknownEdge, "no such edge");
  auto r = bfs_first(N, a, [b](EdgeId e) { return e == b; });
  if (!r) throw Error(ErrorCode::Unreachable, "edges lie in different components of N");
  return r->distance;
}

NearestIrregular nearest_irregular(const NeighborhoodGraph& N, const std::vector<bool>& irregular,
                                   EdgeId e) {
  auto r = bfs_first(N, e, [&](EdgeId x) { return static_cast<bool>(irregular[x]); });
  if (!r) throw Error(ErrorCode::Unreachable, "no irregular edge is reachable");
  return *r;
}

std::vector<std::int64_t> irregular_distances(const NeighborhoodGraph& N,
                                              const std::vector<bool>& irregular) {
  return kernels::nearest_target_parallel(N.incidence, irregular);
}

bool is_monotone(const MatchstickGraph& g, std::span<const VertexId> path,
                 const TolerancePolicy& pol) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] >= g.num_vertices() || path[i + 1] >= g.num_vertices()) return false;
    if (!g.find_edge(path[i], path[i + 1])) return false;
    if (!(g.vertex(path[i + 1]).x > g.vertex(path[i]).x + pol.geom_tol)) return false;
  }
  return path.empty() || path.back() < g.num_vertices();
}

std::int64_t convexity_number(std::span<const double> slopes, double tol) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      if (slopes[i] < slopes[j] - tol) ++c;
    }
  }
  return c;
}

std::int64_t convexity_number(const MatchstickGraph& g, std::span<const VertexId> path,
                              const TolerancePolicy& pol) {
  if (!is_monotone(g, path, pol)) throw Error(ErrorCode::NotMonotone, "path is not monotone");
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Point d = g.vertex(path[i + 1]) - g.vertex(path[i]);
    slopes.push_back(d.y / d.x);
  }
  return convexity_number(slopes, pol.unit_tol);
}

PathFrame::PathFrame(const MatchstickGraph& g, const FaceDecomposition& fd,
                     const std::vector<FaceClass>& classes, EdgeId alpha,
                     const TolerancePolicy& pol)
    : g_(g), fd_(fd), classes_(classes), pol_(pol), hulls_(fd.num_faces()) {
  if (alpha >= g.num_edges()) throw Error(ErrorCode::UnknownEdge, "alpha is not an edge");
  const Edge e = g.edge(alpha);
  double a = direction_angle(g.vertex(e.u), g.vertex(e.v), pol);
  if (a >= std::numbers::pi) a -= std::numbers::pi;
  rotation_ = a <= std::numbers::pi / 2 ? -a : std::numbers::pi - a;
  pts_.reserve(g.num_vertices());
  for (const Point& p : g.vertices()) pts_.push_back(rotate(p, rotation_));
}

double PathFrame::slope(VertexId a, VertexId b) const {
  const Point d = pts_[b] - pts_[a];
  return d.y / d.x;
}

FaceId PathFrame::face_above(VertexId a, VertexId b) const {
  if (pts_[a].x > pts_[b].x) std::swap(a, b);
  const auto id = g_.find_edge(a, b);
  if (!id) throw Error(ErrorCode::UnknownEdge, "vertices are not adjacent");
  const HalfEdgeId h = 2 * *id + (g_.edge(*id).u == a ? 0 : 1);
  return fd_.face_of[h];
}

bool PathFrame::rhombic(FaceId f) const {
  return f != fd_.outer_face && classes_[f].rhombic();
}

const RhombusHull& PathFrame::hull(FaceId f) const {
  if (hulls_[f]) return *hulls_[f];
  auto vs = face_vertices(g_, fd_, f);
  if (vs.size() != 4 || !rhombic(f)) {
    throw Error(ErrorCode::InvalidArgument, "hull of a non-rhombic face");
  }
  std::sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return pts_[a].x < pts_[b].x; });
  for (int i = 0; i < 3; ++i) {
    if (pts_[vs[i + 1]].x - pts_[vs[i]].x <= pol_.geom_tol) {
      throw Error(ErrorCode::AmbiguousHull,
                  "face " + std::to_string(f) + " has two vertices at the same x");
    }
  }
  RhombusHull h;
  h.left = vs[0];
  h.right = vs[3];
  const Point chord = pts_[h.right] - pts_[h.left];
  const bool first_below = cross(chord, pts_[vs[1]] - pts_[h.left]) < 0;
  h.bottom = first_below ? vs[1] : vs[2];
  h.top = first_below ? vs[2] : vs[1];
  auto edge = [&](VertexId a, VertexId b) {
    const auto id = g_.find_edge(a, b);
    if (!id) throw Error(ErrorCode::AmbiguousHull, "face hull does not follow its edges");
    return *id;
  };
  h.lower_left = edge(h.left, h.bottom);
  h.lower_right = edge(h.bottom, h.right);
  h.upper_left = edge(h.left, h.top);
  h.upper_right = edge(h.top, h.right);
  hulls_[f] = h;
  return *hulls_[f];
}

namespace {

bool frame_monotone(const PathFrame& frame, std::span<const VertexId> path, double tol) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!(frame.at(path[i + 1]).x > frame.at(path[i]).x + tol)) return false;
  }
  return true;
}

std::int64_t frame_convexity(const PathFrame& frame, std::span<const VertexId> path,
                             double tol) {
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    slopes.push_back(frame.slope(path[i], path[i + 1]));
  }
  return convexity_number(slopes, tol);
}

}  // namespace

std::optional<FaceId> find_hat(const MatchstickGraph& g, const PathFrame& frame,
                               std::span<const VertexId> path, const TolerancePolicy& pol) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.find_edge(path[i], path[i + 1])) {
      throw Error(ErrorCode::NotMonotone, "path uses a non-edge");
    }
  }
  if (!frame_monotone(frame, path, pol.geom_tol)) {
    throw Error(ErrorCode::NotMonotone, "path is not monotone");
  }
  for (std::size_t j = 0; j + 2 < path.size(); ++j) {
    const FaceId f = frame.face_above(path[j], path[j + 1]);
    if (!frame.rhombic(f)) continue;
    const RhombusHull& h = frame.hull(f);
    if (h.left == path[j] && h.bottom == path[j + 1] && h.right == path[j + 2]) return f;
  }
  return std::nullopt;
}

std::string_view to_string(PathEventKind k) {
  switch (k) {
    case PathEventKind::hat_replaced: return "hat_replaced";
    case PathEventKind::extended_left: return "extended_left";
    case PathEventKind::extended_right: return "extended_right";
    case PathEventKind::stopped_irregular: return "stopped_irregular";
  }
  return "unknown";
}

bool ExtendPathTrace::within_step_bound() const {
  const std::size_t l = final_length;
  return 2 * steps <= l * (l + 1) + 2 * l;
}

ExtendPathTrace extend_path(const MatchstickGraph& g, EdgeId alpha, double r,
                            std::size_t max_steps, const TolerancePolicy& pol) {
  if (alpha >= g.num_edges()) throw Error(ErrorCode::UnknownEdge, "alpha is not an edge");
  if (!(r > 0) || !std::isfinite(r)) throw Error(ErrorCode::NonpositiveRadius, "radius must be positive");
  const CoreGraph core = drop_isolated(g);
  const MatchstickGraph& h = core.graph;
  const auto fd = enumerate_faces(h, pol);
  const auto classes = classify_faces(h, fd, r, pol);
  for (FaceId f = 0; f < fd.num_faces(); ++f) {
    if (classes[f].kind == FaceKind::triangle || classes[f].kind == FaceKind::fat_rhombus) {
      throw Error(ErrorCode::NotReduced, "face " + std::to_string(f) + " is a " +
                                             std::string(to_string(classes[f].kind)));
    }
  }
  if (max_steps == 0) max_steps = g.num_vertices() * (g.num_vertices() + 1);

  const PathFrame frame(h, fd, classes, alpha, pol);
  ExtendPathTrace t;
  t.alpha = alpha;
  t.rotation = frame.rotation();

  std::vector<VertexId> path{h.edge(alpha).u, h.edge(alpha).v};
  if (frame.at(path[0]).x > frame.at(path[1]).x) std::swap(path[0], path[1]);
  auto original = [&](std::vector<VertexId> p) {
    for (auto& v : p) v = core.original[v];
    return p;
  };
  auto bump = [&](std::size_t phase) {
    if (t.s.size() <= phase) t.s.resize(phase + 1, 0);
    ++t.s[phase];
  };
  auto finish = [&](PathResult res) {
    t.result = res;
    t.final_path = original(path);
    t.final_length = path.size() - 1;
    t.steps = t.hats + t.scans;
  };
  const double slope_tol = pol.unit_tol;

  for (std::size_t phase = 2;; ++phase) {
    if (t.s.size() <= phase) t.s.resize(phase + 1, 0);
    // Step (i, 1): replace hats until none is left.
    while (auto hat = find_hat(h, frame, path, pol)) {
      if (t.hats + t.scans >= max_steps) {
        t.exhausted_reason = "step limit " + std::to_string(max_steps) + " reached";
        finish(PathResult::exhausted);
        return t;
      }
      const RhombusHull& hull = frame.hull(*hat);
      const std::int64_t before = frame_convexity(frame, path, slope_tol);
      auto it = std::find(path.begin(), path.end(), hull.bottom);
      *it = hull.top;
      const std::int64_t after = frame_convexity(frame, path, slope_tol);
      if (after != before - 1) {
        throw Error(ErrorCode::InvariantViolation,
                    "hat replacement changed the convexity number from " +
                        std::to_string(before) + " to " + std::to_string(after));
      }
      t.events.push_back({PathEventKind::hat_replaced, phase, *hat, std::nullopt, before, after,
                          original(path)});
      bump(phase);
      ++t.hats;
    }

    // Step (i, 2): look at the faces above the path.
    if (t.hats + t.scans >= max_steps) {
      t.exhausted_reason = "step limit " + std::to_string(max_steps) + " reached";
      finish(PathResult::exhausted);
      return t;
    }
    ++t.scans;
    const std::int64_t c = frame_convexity(frame, path, slope_tol);
    std::vector<FaceId> above;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      const FaceId f = frame.face_above(path[j], path[j + 1]);
      if (!frame.rhombic(f)) {
        const EdgeId eps = *h.find_edge(path[j], path[j + 1]);
        t.irregular_edge = eps;
        t.events.push_back({PathEventKind::stopped_irregular, phase, f, eps, c, c,
                            original(path)});
        finish(PathResult::found_irregular);
        return t;
      }
      above.push_back(f);
    }

    // Sidedness: true = rightsided. A rightsided edge after a leftsided one
    // would put two faces above the same vertex.
    std::vector<bool> right(above.size());
    for (std::size_t j = 0; j < above.size(); ++j) {
      const RhombusHull& hull = frame.hull(above[j]);
      const EdgeId eps = *h.find_edge(path[j], path[j + 1]);
      if (eps == hull.lower_right) {
        right[j] = true;
      } else if (eps != hull.lower_left) {
        throw Error(ErrorCode::InvariantViolation, "path edge is not on the lower hull above it");
      }
    }
    for (std::size_t j = 1; j < right.size(); ++j) {
      if (right[j] && !right[j - 1]) {
        throw Error(ErrorCode::InvariantViolation,
                    "rightsided edge follows a leftsided one at position " + std::to_string(j));
      }
    }

    PathEvent ev;
    ev.phase = phase;
    ev.c_before = c;
    if (right.front()) {
      const RhombusHull& hull = frame.hull(above.front());
      path.insert(path.begin(), hull.left);
      ev.kind = PathEventKind::extended_left;
      ev.face = above.front();
      ev.edge = hull.lower_left;
    } else {
      const RhombusHull& hull = frame.hull(above.back());
      path.push_back(hull.right);
      ev.kind = PathEventKind::extended_right;
      ev.face = above.back();
      ev.edge = hull.lower_right;
    }
    if (!frame_monotone(frame, path, pol.geom_tol)) {
      throw Error(ErrorCode::InvariantViolation, "extension broke monotonicity");
    }
    ev.c_after = frame_convexity(frame, path, slope_tol);
    const auto len = static_cast<std::int64_t>(path.size() - 1);
    if (ev.c_after - ev.c_before > len - 1) {
      throw Error(ErrorCode::InvariantViolation, "extension raised the convexity number too much");
    }
    ev.path = original(path);
    t.events.push_back(std::move(ev));
  }
}

nlohmann::json to_json(const ExtendPathTrace& t) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& ev : t.events) {
    nlohmann::json j = {{"kind", to_string(ev.kind)},
                        {"phase", ev.phase},
                        {"c_before", ev.c_before},
                        {"c_after", ev.c_after},
                        {"path", ev.path}};
    j["face"] = ev.face ? nlohmann::json(*ev.face) : nlohmann::json(nullptr);
    j["edge"] = ev.edge ? nlohmann::json(*ev.edge) : nlohmann::json(nullptr);
    events.push_back(std::move(j));
  }
  return {
      {"alpha", t.alpha},
      {"rotation", t.rotation},
      {"result", t.result == PathResult::found_irregular ? "found_irregular" : "exhausted"},
      {"irregular_edge",
       t.irregular_edge ? nlohmann::json(*t.irregular_edge) : nlohmann::json(nullptr)},
      {"final_path", t.final_path},
      {"final_length", t.final_length},
      {"hats", t.hats},
      {"scans", t.scans},
      {"steps", t.steps},
      {"s", t.s},
      {"within_step_bound", t.within_step_bound()},
      {"exhausted_reason", t.exhausted_reason},
      {"events", events},
  };
}

}  // namespace matchstick
