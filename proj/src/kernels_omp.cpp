#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <tuple>
#include <unordered_map>

#include "matchstick/kernels.hpp"

namespace matchstick::kernels {

namespace detail {
std::int64_t bfs_to_target(const Incidence& inc, const std::vector<bool>& target,
                           std::uint32_t source, std::vector<std::uint32_t>& node_stamp,
                           std::vector<std::uint32_t>& group_stamp, std::uint32_t stamp,
                           std::vector<std::uint32_t>& frontier, std::vector<std::uint32_t>& next);
std::uint64_t column_mask(int width);
int window_edges(std::uint64_t cells, int width, std::uint64_t not_last_col);
bool subset_less(std::uint64_t a, std::uint64_t b);
std::uint64_t next_combination(std::uint64_t x);
std::vector<int> cells_of(std::uint64_t mask);
}  // namespace detail

namespace {

struct CellKey {
  std::int64_t i;
  std::int64_t j;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    return std::hash<std::int64_t>()(k.i * 73856093LL ^ k.j * 19349663LL);
  }
};

struct Box {
  std::int64_t i0, i1, j0, j1;
};

// Cells are only worth it while the incidence count stays near linear.
constexpr double kMaxCellsPerItem = 4096.0;

}  // namespace

std::vector<CrossingPair> crossing_pairs_parallel(const MatchstickGraph& g,
                                                  const TolerancePolicy& pol) {
  const auto& edges = g.edges();
  const auto nv = g.num_vertices();
  std::vector<EdgeId> live;
  live.reserve(edges.size());
  double minx = INFINITY, maxx = -INFINITY, miny = INFINITY, maxy = -INFINITY;
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    if (e.u >= nv || e.v >= nv) continue;
    const Point p = g.vertex(e.u), q = g.vertex(e.v);
    if (distance(p, q) <= pol.geom_tol) continue;
    live.push_back(id);
    minx = std::min({minx, p.x, q.x});
    maxx = std::max({maxx, p.x, q.x});
    miny = std::min({miny, p.y, q.y});
    maxy = std::max({maxy, p.y, q.y});
  }
  if (live.size() < 2) return {};

  const double area = std::max((maxx - minx) * (maxy - miny), 1e-6);
  const double h = std::clamp(std::sqrt(area / static_cast<double>(live.size())), 0.02, 1.0);
  const double pad = pol.geom_tol;

  std::vector<Box> boxes(edges.size());
  double incidences = 0.0;
  for (EdgeId id : live) {
    const Point p = g.vertex(edges[id].u), q = g.vertex(edges[id].v);
    Box b{static_cast<std::int64_t>(std::floor((std::min(p.x, q.x) - pad) / h)),
          static_cast<std::int64_t>(std::floor((std::max(p.x, q.x) + pad) / h)),
          static_cast<std::int64_t>(std::floor((std::min(p.y, q.y) - pad) / h)),
          static_cast<std::int64_t>(std::floor((std::max(p.y, q.y) + pad) / h))};
    boxes[id] = b;
    incidences += static_cast<double>(b.i1 - b.i0 + 1) * static_cast<double>(b.j1 - b.j0 + 1);
  }
  if (incidences > kMaxCellsPerItem * static_cast<double>(live.size())) {
    return crossing_pairs_serial(g, pol);
  }

  std::unordered_map<CellKey, std::vector<EdgeId>, CellHash> grid;
  for (EdgeId id : live) {
    const Box& b = boxes[id];
    for (auto i = b.i0; i <= b.i1; ++i) {
      for (auto j = b.j0; j <= b.j1; ++j) grid[{i, j}].push_back(id);
    }
  }
  std::vector<std::pair<CellKey, const std::vector<EdgeId>*>> cells;
  cells.reserve(grid.size());
  for (const auto& [key, ids] : grid) {
    if (ids.size() >= 2) cells.emplace_back(key, &ids);
  }

  std::vector<std::vector<CrossingPair>> per_thread(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto& out = per_thread[omp_get_thread_num()];
    const CellKey key = cells[c].first;
    const auto& ids = *cells[c].second;
    for (std::size_t x = 0; x < ids.size(); ++x) {
      for (std::size_t y = x + 1; y < ids.size(); ++y) {
        const EdgeId a = std::min(ids[x], ids[y]);
        const EdgeId b = std::max(ids[x], ids[y]);
        const Box& ba = boxes[a];
        const Box& bb = boxes[b];
        // Report each pair only from the first cell of the box overlap.
        if (key.i != std::max(ba.i0, bb.i0) || key.j != std::max(ba.j0, bb.j0)) continue;
        if (ba.i1 < bb.i0 || bb.i1 < ba.i0 || ba.j1 < bb.j0 || bb.j1 < ba.j0) continue;
        const auto rel = segment_relation(g.vertex(edges[a].u), g.vertex(edges[a].v),
                                          g.vertex(edges[b].u), g.vertex(edges[b].v), pol);
        if (is_crossing(rel)) out.push_back({a, b, rel});
      }
    }
  }
  std::vector<CrossingPair> all;
  for (auto& v : per_thread) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(), [](const CrossingPair& l, const CrossingPair& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });
  return all;
}

std::vector<VertexPair> distance_window_pairs_parallel(std::span<const Point> pts, double lo,
                                                       double hi) {
  if (pts.size() < 2) return {};
  const double h = std::max(hi, 1e-6);
  std::unordered_map<CellKey, std::vector<VertexId>, CellHash> grid;
  std::vector<CellKey> key_of(pts.size());
  for (VertexId v = 0; v < pts.size(); ++v) {
    const CellKey k{static_cast<std::int64_t>(std::floor(pts[v].x / h)),
                    static_cast<std::int64_t>(std::floor(pts[v].y / h))};
    key_of[v] = k;
    grid[k].push_back(v);
  }

  std::vector<std::vector<VertexPair>> per_thread(omp_get_max_threads());
  const auto n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<VertexId>(vi);
    auto& out = per_thread[omp_get_thread_num()];
    const CellKey k = key_of[v];
    for (std::int64_t di = -1; di <= 1; ++di) {
      for (std::int64_t dj = -1; dj <= 1; ++dj) {
        auto it = grid.find({k.i + di, k.j + dj});
        if (it == grid.end()) continue;
        for (VertexId w : it->second) {
          if (w <= v) continue;
          const double d = distance(pts[v], pts[w]);
          if (d >= lo && d <= hi) out.emplace_back(v, w);
        }
      }
    }
  }
  std::vector<VertexPair> all;
  for (auto& part : per_thread) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::int64_t> nearest_target_parallel(const Incidence& inc,
                                                  const std::vector<bool>& target) {
  const auto n = static_cast<std::int64_t>(inc.groups_of_node.size());
  std::vector<std::int64_t> dist(n, -1);
#pragma omp parallel
  {
    std::vector<std::uint32_t> node_stamp(n, 0);
    std::vector<std::uint32_t> group_stamp(inc.nodes_of_group.size(), 0);
    std::vector<std::uint32_t> frontier, next;
#pragma omp for schedule(dynamic, 32)
    for (std::int64_t s = 0; s < n; ++s) {
      dist[s] = detail::bfs_to_target(inc, target, static_cast<std::uint32_t>(s), node_stamp,
                                      group_stamp, static_cast<std::uint32_t>(s + 1), frontier,
                                      next);
    }
  }
  return dist;
}

WindowBest best_window_subset_parallel(int width, int n, std::uint64_t budget) {
  const int cells = width * width;
  if (width < 1 || cells > 63 || n < 1 || n > cells) {
    return best_window_subset_serial(width, n, budget);
  }
  const std::uint64_t total = binomial(cells, n);
  if (total > budget) return best_window_subset_serial(width, n, budget);

  const std::uint64_t not_last = detail::column_mask(width);
  // Block h holds the subsets whose highest cell is h.
  const int blocks = cells - (n - 1);
  std::vector<int> block_best(blocks, -1);
  std::vector<std::uint64_t> block_mask(blocks, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < blocks; ++b) {
    const int h = n - 1 + b;
    const std::uint64_t top = std::uint64_t{1} << h;
    int best = -1;
    std::uint64_t best_mask = 0;
    std::uint64_t rest = n == 1 ? 0 : (std::uint64_t{1} << (n - 1)) - 1;
    while (true) {
      const std::uint64_t mask = rest | top;
      const int e = detail::window_edges(mask, width, not_last);
      if (e > best || (e == best && detail::subset_less(mask, best_mask))) {
        best = e;
        best_mask = mask;
      }
      if (n == 1) break;
      rest = detail::next_combination(rest);
      if (rest >= top) break;
    }
    block_best[b] = best;
    block_mask[b] = best_mask;
  }

  WindowBest out;
  std::uint64_t best_mask = 0;
  for (int b = 0; b < blocks; ++b) {
    if (block_best[b] > out.edges ||
        (block_best[b] == out.edges && detail::subset_less(block_mask[b], best_mask))) {
      out.edges = block_best[b];
      best_mask = block_mask[b];
    }
  }
  out.evaluated = total;
  out.complete = true;
  out.cells = detail::cells_of(best_mask);
  return out;
}

}  // namespace matchstick::kernels
