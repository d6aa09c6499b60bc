#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "matchstick/kernels.hpp"

namespace matchstick::kernels {

namespace {

bool usable(const MatchstickGraph& g, const Edge& e, const TolerancePolicy& pol) {
  return e.u < g.num_vertices() && e.v < g.num_vertices() &&
         distance(g.vertex(e.u), g.vertex(e.v)) > pol.geom_tol;
}

}  // namespace

std::vector<CrossingPair> crossing_pairs_serial(const MatchstickGraph& g,
                                                const TolerancePolicy& pol) {
  std::vector<CrossingPair> out;
  const auto& edges = g.edges();
  for (EdgeId a = 0; a < edges.size(); ++a) {
    if (!usable(g, edges[a], pol)) continue;
    for (EdgeId b = a + 1; b < edges.size(); ++b) {
      if (!usable(g, edges[b], pol)) continue;
      const auto rel = segment_relation(g.vertex(edges[a].u), g.vertex(edges[a].v),
                                        g.vertex(edges[b].u), g.vertex(edges[b].v), pol);
      if (is_crossing(rel)) out.push_back({a, b, rel});
    }
  }
  return out;
}

std::vector<VertexPair> distance_window_pairs_serial(std::span<const Point> pts, double lo,
                                                     double hi) {
  std::vector<VertexPair> out;
  for (VertexId i = 0; i < pts.size(); ++i) {
    for (VertexId j = i + 1; j < pts.size(); ++j) {
      const double d = distance(pts[i], pts[j]);
      if (d >= lo && d <= hi) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace detail {

// BFS from `source` until the first target level; ties are irrelevant here
// because only the distance is returned. Scratch buffers are reused.
std::int64_t bfs_to_target(const Incidence& inc, const std::vector<bool>& target,
                           std::uint32_t source, std::vector<std::uint32_t>& node_stamp,
                           std::vector<std::uint32_t>& group_stamp, std::uint32_t stamp,
                           std::vector<std::uint32_t>& frontier,
                           std::vector<std::uint32_t>& next) {
  if (target[source]) return 0;
  frontier.assign(1, source);
  node_stamp[source] = stamp;
  std::int64_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (std::uint32_t v : frontier) {
      for (std::uint32_t grp : inc.groups_of_node[v]) {
        if (group_stamp[grp] == stamp) continue;
        group_stamp[grp] = stamp;
        for (std::uint32_t w : inc.nodes_of_group[grp]) {
          if (node_stamp[w] == stamp) continue;
          if (target[w]) return depth;
          node_stamp[w] = stamp;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return -1;
}

}  // namespace detail

std::vector<std::int64_t> nearest_target_serial(const Incidence& inc,
                                                const std::vector<bool>& target) {
  const auto n = inc.groups_of_node.size();
  std::vector<std::int64_t> dist(n, -1);
  std::vector<std::uint32_t> node_stamp(n, 0);
  std::vector<std::uint32_t> group_stamp(inc.nodes_of_group.size(), 0);
  std::vector<std::uint32_t> frontier, next;
  for (std::uint32_t s = 0; s < n; ++s) {
    dist[s] = detail::bfs_to_target(inc, target, s, node_stamp, group_stamp, s + 1, frontier,
                                    next);
  }
  return dist;
}

std::vector<std::int64_t> nearest_target_multisource(const Incidence& inc,
                                                     const std::vector<bool>& target) {
  const auto n = inc.groups_of_node.size();
  std::vector<std::int64_t> dist(n, -1);
  std::vector<bool> group_done(inc.nodes_of_group.size(), false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (target[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t grp : inc.groups_of_node[v]) {
      if (group_done[grp]) continue;
      group_done[grp] = true;
      for (std::uint32_t w : inc.nodes_of_group[grp]) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

namespace detail {

std::uint64_t column_mask(int width) {
  std::uint64_t m = 0;
  for (int c = 0; c < width * width; ++c) {
    if (c % width != width - 1) m |= std::uint64_t{1} << c;
  }
  return m;
}

int window_edges(std::uint64_t cells, int width, std::uint64_t not_last_col) {
  return std::popcount(cells & (cells >> 1) & not_last_col) +
         std::popcount(cells & (cells >> width));
}

// Sorted-index lexicographic order on equal-size subsets: the subset owning
// the lowest differing cell comes first.
bool subset_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) != 0;
}

std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::vector<int> cells_of(std::uint64_t mask) {
  std::vector<int> cells;
  while (mask) {
    cells.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return cells;
}

}  // namespace detail

WindowBest best_window_subset_serial(int width, int n, std::uint64_t budget) {
  WindowBest best;
  const int cells = width * width;
  if (width < 1 || cells > 63 || n < 0 || n > cells) return best;
  const std::uint64_t total = binomial(cells, n);
  const std::uint64_t limit = std::uint64_t{1} << cells;
  const std::uint64_t not_last = detail::column_mask(width);
  std::uint64_t best_mask = 0;
  std::uint64_t mask = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t k = 0; k < total && k < budget; ++k) {
    const int e = detail::window_edges(mask, width, not_last);
    ++best.evaluated;
    if (e > best.edges || (e == best.edges && detail::subset_less(mask, best_mask))) {
      best.edges = e;
      best_mask = mask;
    }
    if (n == 0) break;
    mask = detail::next_combination(mask);
    if (mask >= limit) break;
  }
  best.complete = best.evaluated == total;
  best.cells = detail::cells_of(best_mask);
  return best;
}

}  // namespace matchstick::kernels
