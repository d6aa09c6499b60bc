#include "matchstick/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "matchstick/error.hpp"

namespace matchstick {

MatchstickGraph gen_grid(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be at least 1");
  const double off = (k - 1) / 2.0;
  std::vector<Point> pts;
  std::vector<Edge> edges;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) pts.push_back({i - off, j - off});
  }
  auto id = [k](int i, int j) { return static_cast<VertexId>(j * k + i); };
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      if (i + 1 < k) edges.push_back({id(i, j), id(i + 1, j)});
      if (j + 1 < k) edges.push_back({id(i, j), id(i, j + 1)});
    }
  }
  return MatchstickGraph(std::move(pts), std::move(edges));
}

Point zonotope_direction(int k, int j) {
  const double t = j * std::numbers::pi / k;
  return {std::cos(t), std::sin(t)};
}

namespace {

// Interval tiling of the 2k-gon. Vertex ids: 0 is the empty sum, then the
// intervals [i..j] in lexicographic order. k = 0 and k = 1 give a single
// vertex and a single edge.
struct IntervalTiling {
  int k = 0;
  std::vector<Point> pts;
  std::vector<Edge> edges;
  std::vector<VertexId> chain;  // Q_0 = [0..k-1], Q_1 = [1..k-1], ..., Q_k = empty

  VertexId id(int i, int j) const {
    // Intervals starting before i: sum_{t<i} (k - t).
    return static_cast<VertexId>(1 + i * k - i * (i - 1) / 2 + (j - i));
  }
};

IntervalTiling interval_tiling(int k) {
  IntervalTiling t;
  t.k = k;
  std::vector<Point> dir(k);
  Point center{0, 0};
  for (int j = 0; j < k; ++j) {
    dir[j] = zonotope_direction(k, j);
    center = center + 0.5 * dir[j];
  }
  t.pts.push_back(Point{0, 0} - center);
  for (int i = 0; i < k; ++i) {
    Point sum{0, 0};
    for (int j = i; j < k; ++j) {
      sum = sum + dir[j];
      t.pts.push_back(sum - center);
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const VertexId v = t.id(i, j);
      if (i == j) {
        t.edges.push_back({0, v});
      } else {
        t.edges.push_back({t.id(i, j - 1), v});
        t.edges.push_back({t.id(i + 1, j), v});
      }
    }
  }
  for (int i = 0; i < k; ++i) t.chain.push_back(t.id(i, k - 1));
  t.chain.push_back(0);
  return t;
}

}  // namespace

MatchstickGraph gen_zonotope(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "zonotope needs k >= 2");
  auto t = interval_tiling(k);
  return MatchstickGraph(std::move(t.pts), std::move(t.edges));
}

std::int64_t triangle_free_edge_target(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  // Largest e with 4n - 3 - 2e >= sqrt(8n - 7).
  const std::int64_t d = 8 * n - 7;
  auto ok = [&](std::int64_t e) {
    const std::int64_t s = 4 * n - 3 - 2 * e;
    return s >= 0 && s * s >= d;
  };
  auto e = static_cast<std::int64_t>(
      std::floor(2.0 * n - std::sqrt(2.0 * n - 1.75) - 1.5));
  while (!ok(e)) --e;
  while (ok(e + 1)) ++e;
  return e;
}

TriangleFreeConstruction triangle_free_construction(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  int k = 0;
  while ((k + 1) * (k + 2) / 2 + 1 <= n) ++k;
  const int base = k * (k + 1) / 2 + 1;
  const int j = n - base;

  TriangleFreeConstruction out;
  out.base_k = k;
  out.added = j;
  IntervalTiling t = interval_tiling(k);
  if (j == 0) {
    out.graph = MatchstickGraph(std::move(t.pts), std::move(t.edges));
    return out;
  }

  // Build around the boundary chain from the top vertex [0..k-1] towards the
  // empty sum, translating it outward along the exterior bisector there.
  const double wa = (k - 0.5) * std::numbers::pi / k;
  const Point w{std::cos(wa), std::sin(wa)};
  std::vector<Edge> added;
  VertexId prev = 0;
  for (int s = 1; s <= j; ++s) {
    const VertexId anchor = t.chain[s - 1];
    const auto v = static_cast<VertexId>(t.pts.size());
    t.pts.push_back(t.pts[anchor] + w);
    added.push_back({anchor, v});
    if (s > 1) added.push_back({prev, v});
    prev = v;
  }
  t.edges.insert(t.edges.end(), added.begin(), added.end());
  out.graph = MatchstickGraph(std::move(t.pts), std::move(t.edges));
  for (const Edge& e : added) out.augmentation.push_back(*out.graph.find_edge(e.u, e.v));
  std::sort(out.augmentation.begin(), out.augmentation.end());
  return out;
}

MatchstickGraph gen_triangle_free(int n) { return triangle_free_construction(n).graph; }

namespace {

struct LatticePoint {
  int u;
  int w;
};

std::vector<LatticePoint> lattice_points(int p, int m) {
  std::vector<LatticePoint> out;
  for (int u = -p; u <= p; ++u) {
    for (int w = -m; w <= m; ++w) {
      if (((u - w) % 2 + 2) % 2 == 0) out.push_back({u, w});
    }
  }
  return out;
}

}  // namespace

DiskLattice gen_disk_lattice(double r, int n) {
  if (!std::isfinite(r) || r <= 0) throw Error(ErrorCode::NonpositiveRadius, "radius must be positive");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  DiskLatticeParams par;
  par.r = r;
  par.n = n;
  par.p = static_cast<int>(std::floor(r)) - 1;
  if (par.p < 1) throw Error(ErrorCode::InfeasibleRadius, "the lattice needs r >= 2");
  par.nominal_m = n / (2 * par.p);

  auto count = [&](int m) { return static_cast<int>(lattice_points(par.p, m).size()); };
  int m = 0;
  while (count(m + 1) <= n) ++m;
  std::vector<LatticePoint> chosen;
  if (m == 0) {
    // Even the thinnest strip is too big; keep its first n points.
    par.truncated = true;
    par.m = 1;
    chosen = lattice_points(par.p, 1);
    chosen.resize(std::min<std::size_t>(chosen.size(), n));
  } else {
    par.m = m;
    chosen = lattice_points(par.p, m);
  }
  par.eps = 1.0 / (4.0 * par.m);
  par.delta = std::sqrt(1.0 - par.eps * par.eps);
  par.a = {par.delta, par.eps};
  par.b = {par.delta, -par.eps};
  par.lattice_points = static_cast<int>(chosen.size());

  std::vector<Point> pts;
  std::map<std::pair<int, int>, VertexId> index;
  for (const auto& q : chosen) {
    index[{q.u, q.w}] = static_cast<VertexId>(pts.size());
    pts.push_back({q.u * par.delta, q.w * par.eps});
  }
  std::vector<Edge> edges;
  for (const auto& q : chosen) {
    const VertexId from = index[{q.u, q.w}];
    for (int dw : {1, -1}) {
      auto it = index.find({q.u + 1, q.w + dw});
      if (it != index.end()) edges.push_back({from, it->second});
    }
  }

  // Padding: greedy scan of a 0.4-spaced grid away from the strip.
  const double band = par.eps * par.m + 1.1;
  const double step = 0.4;
  const int reach = static_cast<int>(std::floor(r / step));
  auto far_enough = [&](Point c) {
    for (const Point& q : pts) {
      const double d = distance(c, q);
      if (d < 0.1 || std::abs(d - 1.0) < 0.1) return false;
    }
    return true;
  };
  const int need = n - par.lattice_points;
  for (int yi = reach; yi >= -reach && par.padding < need; --yi) {
    for (int xi = -reach; xi <= reach && par.padding < need; ++xi) {
      const Point c{xi * step, yi * step};
      if (std::abs(c.y) < band || norm(c) > r - 1e-9) continue;
      if (!far_enough(c)) continue;
      pts.push_back(c);
      ++par.padding;
    }
  }
  if (par.padding < need) {
    throw Error(ErrorCode::InfeasibleRadius, "no room left in the disk for padding vertices");
  }

  for (const Point& q : pts) {
    if (norm(q) > r) throw Error(ErrorCode::InvariantViolation, "lattice point outside disk");
  }
  DiskLattice out{MatchstickGraph(std::move(pts), std::move(edges), DiskSpec{{0, 0}, r}), par};
  return out;
}

MatchstickGraph gen_rhombus_strip(int count, double theta, double tilt) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "strip needs at least one rhombus");
  if (!(theta > 0) || !(theta < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidArgument, "theta must lie in (0, pi)");
  }
  const Point s{std::cos(tilt), std::sin(tilt)};
  const Point v{std::cos(tilt + theta), std::sin(tilt + theta)};
  std::vector<Point> pts;
  for (int i = 0; i <= count; ++i) pts.push_back(static_cast<double>(i) * s);
  for (int i = 0; i <= count; ++i) pts.push_back(static_cast<double>(i) * s + v);
  std::vector<Edge> edges;
  const auto b0 = static_cast<VertexId>(count + 1);
  for (int i = 0; i <= count; ++i) {
    const auto a = static_cast<VertexId>(i);
    edges.push_back({a, b0 + a});
    if (i < count) {
      edges.push_back({a, a + 1});
      edges.push_back({b0 + a, b0 + a + 1});
    }
  }
  return MatchstickGraph(std::move(pts), std::move(edges));
}

}  // namespace matchstick
