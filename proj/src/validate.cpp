#include "matchstick/validate.hpp"

#include <algorithm>
#include <string>

#include "matchstick/kernels.hpp"

namespace matchstick {

std::string_view to_string(Check c) {
  switch (c) {
    case Check::unit_lengths: return "unit_lengths";
    case Check::noncrossing: return "noncrossing";
    case Check::simple: return "simple";
    case Check::connected: return "connected";
    case Check::triangle_free: return "triangle_free";
    case Check::disk_contained: return "disk_contained";
  }
  return "unknown";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

CheckStatus ValidationReport::operator[](Check c) const {
  auto it = status.find(c);
  return it == status.end() ? CheckStatus::skipped : it->second;
}

bool ValidationReport::ok() const {
  return std::none_of(status.begin(), status.end(),
                      [](const auto& kv) { return kv.second == CheckStatus::fail; });
}

namespace {

constexpr std::size_t kMaxViolationsPerCheck = 1000;

class Recorder {
 public:
  Recorder(ValidationReport& report, Check check) : report_(report), check_(check) {}

  void add(std::vector<VertexId> vs, std::vector<EdgeId> es, std::string reason) {
    ++count_;
    if (count_ <= kMaxViolationsPerCheck) {
      report_.violations.push_back({check_, std::move(vs), std::move(es), std::move(reason)});
    }
  }

  void finish() {
    report_.status[check_] = count_ == 0 ? CheckStatus::pass : CheckStatus::fail;
  }

 private:
  ValidationReport& report_;
  Check check_;
  std::size_t count_ = 0;
};

bool in_range(const MatchstickGraph& g, const Edge& e) {
  return e.u < g.num_vertices() && e.v < g.num_vertices();
}

void check_simple(const MatchstickGraph& g, const TolerancePolicy& pol, ValidationReport& rep) {
  Recorder rec(rep, Check::simple);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!is_finite(g.vertex(v))) rec.add({v}, {}, "non-finite coordinate");
  }
  const auto& edges = g.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    if (!in_range(g, edges[id])) {
      rec.add({}, {id}, "vertex index out of range");
    } else if (edges[id].u == edges[id].v) {
      rec.add({edges[id].u}, {id}, "self-loop");
    }
    if (id > 0 && edges[id] == edges[id - 1]) rec.add({}, {id - 1, id}, "duplicate edge");
  }
  for (auto [a, b] : kernels::distance_window_pairs_parallel(g.vertices(), 0.0, pol.geom_tol)) {
    rec.add({a, b}, {}, "coincident vertices");
  }
  rec.finish();
}

void check_unit(const MatchstickGraph& g, const TolerancePolicy& pol, ValidationReport& rep) {
  Recorder rec(rep, Check::unit_lengths);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge e = g.edge(id);
    if (!in_range(g, e)) continue;
    if (!unit_distance(g.vertex(e.u), g.vertex(e.v), pol)) {
      rec.add({e.u, e.v}, {id},
              "length " + std::to_string(distance(g.vertex(e.u), g.vertex(e.v))));
    }
  }
  rec.finish();
}

void check_noncrossing(const MatchstickGraph& g, const TolerancePolicy& pol,
                       ValidationReport& rep) {
  Recorder rec(rep, Check::noncrossing);
  for (const auto& p : kernels::crossing_pairs_parallel(g, pol)) {
    rec.add({}, {p.a, p.b}, std::string(to_string(p.relation)));
  }
  rec.finish();
}

void check_connected(const MatchstickGraph& g, ValidationReport& rep) {
  Recorder rec(rep, Check::connected);
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    for (std::size_t c = 1; c < comps.size(); ++c) {
      rec.add({comps[c].front()}, {}, "component not reachable from vertex 0");
    }
  }
  rec.finish();
}

void check_triangle_free(const MatchstickGraph& g, ValidationReport& rep) {
  Recorder rec(rep, Check::triangle_free);
  auto adj = adjacency(g);
  for (auto& list : adj) std::sort(list.begin(), list.end());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge e = g.edge(id);
    if (!in_range(g, e) || e.u == e.v) continue;
    const auto& nu = adj[e.u];
    const auto& nv = adj[e.v];
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i].first < nv[j].first) {
        ++i;
      } else if (nv[j].first < nu[i].first) {
        ++j;
      } else {
        const VertexId w = nu[i].first;
        if (w > e.v) rec.add({e.u, e.v, w}, {id, nu[i].second, nv[j].second}, "3-cycle");
        ++i;
        ++j;
      }
    }
  }
  rec.finish();
}

void check_disk(const MatchstickGraph& g, const TolerancePolicy& pol, ValidationReport& rep) {
  if (!g.disk()) return;  // nothing to check against; stays skipped
  Recorder rec(rep, Check::disk_contained);
  {
    const DiskSpec d = *g.disk();
    if (!(d.radius > 0.0) || !std::isfinite(d.radius)) {
      rec.add({}, {}, "disk radius must be finite and positive");
    } else {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (distance(g.vertex(v), d.center) > d.radius + pol.geom_tol) {
          rec.add({v}, {}, "vertex outside disk");
        }
      }
    }
  }
  rec.finish();
}

}  // namespace

ValidationReport validate(const MatchstickGraph& g, const TolerancePolicy& pol,
                          const std::set<Check>& checks) {
  ValidationReport rep;
  for (Check c : kAllChecks) rep.status[c] = CheckStatus::skipped;
  if (checks.contains(Check::simple)) check_simple(g, pol, rep);
  if (checks.contains(Check::unit_lengths)) check_unit(g, pol, rep);
  if (checks.contains(Check::noncrossing)) check_noncrossing(g, pol, rep);
  if (checks.contains(Check::connected)) check_connected(g, rep);
  if (checks.contains(Check::triangle_free)) check_triangle_free(g, rep);
  if (checks.contains(Check::disk_contained)) check_disk(g, pol, rep);
  return rep;
}

DegreeProfile degree_profile(const MatchstickGraph& g) {
  DegreeProfile out;
  const auto adj = adjacency(g);
  for (const auto& list : adj) ++out.histogram[list.size()];
  out.connected = connected_components(g).size() <= 1;
  return out;
}

}  // namespace matchstick
