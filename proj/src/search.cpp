#include "matchstick/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "matchstick/analysis.hpp"
#include "matchstick/faces.hpp"
#include "matchstick/generators.hpp"
#include "matchstick/kernels.hpp"
#include "matchstick/validate.hpp"

namespace matchstick {

std::string_view to_string(FamilyName f) {
  switch (f) {
    case FamilyName::lattice_window: return "lattice_window";
    case FamilyName::zonotope_flips: return "zonotope_flips";
    case FamilyName::augmentation_variants: return "augmentation_variants";
  }
  return "unknown";
}

FamilyName family_from_string(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '-', '_');
  for (FamilyName f : {FamilyName::lattice_window, FamilyName::zonotope_flips,
                       FamilyName::augmentation_variants}) {
    if (t == to_string(f)) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(s) + "'");
}

std::string_view to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::below: return "below";
    case ProbeStatus::equal: return "equal";
    case ProbeStatus::above: return "above";
  }
  return "unknown";
}

namespace {

const std::set<Check> kFamilyChecks = {Check::unit_lengths, Check::noncrossing, Check::simple,
                                       Check::triangle_free};

bool acceptable(const MatchstickGraph& g) { return validate(g, {}, kFamilyChecks).ok(); }

// Keeps the candidate with more edges; ties go to the lexicographically
// smaller drawing so the answer does not depend on visiting order.
void consider(SearchResult& best, const MatchstickGraph& g) {
  const auto e = static_cast<std::int64_t>(g.num_edges());
  if (e > best.best_e || (e == best.best_e && lexicographically_less(g, best.witness))) {
    best.best_e = e;
    best.witness = g;
  }
}

int zonotope_k_for(int n) {
  for (int k = 2; k <= 64; ++k) {
    const int nk = k * (k + 1) / 2 + 1;
    if (nk == n) return k;
    if (nk > n) break;
  }
  return -1;
}

SearchResult lattice_window(int width, int n, std::uint64_t budget) {
  if (width < 1 || width * width > 63 || n < 1 || n > width * width) {
    throw Error(ErrorCode::InvalidArgument, "n must fit in the window (side <= 7)");
  }
  const auto res = kernels::best_window_subset_parallel(width, n, budget);
  SearchResult out;
  out.family = FamilyName::lattice_window;
  out.n = n;
  out.best_e = res.edges;
  out.exhaustive = res.complete;
  out.evaluated = res.evaluated;
  std::vector<Point> pts;
  std::vector<Edge> edges;
  for (int c : res.cells) pts.push_back({static_cast<double>(c % width), static_cast<double>(c / width)});
  for (std::size_t a = 0; a < res.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < res.cells.size(); ++b) {
      const int ca = res.cells[a], cb = res.cells[b];
      const bool horizontal = cb == ca + 1 && ca % width != width - 1;
      if (horizontal || cb == ca + width) {
        edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
      }
    }
  }
  out.witness = MatchstickGraph(std::move(pts), std::move(edges));
  if (!res.complete) throw BudgetExceeded(out);
  return out;
}

// A rhombic tiling of the 2k-gon as its vertex labels: subset S of the k
// directions sits at sum_{t in S} v_t. Labels fit in a 64-bit set for k <= 6.
using Tiling = std::uint64_t;

Tiling interval_labels(int k) {
  Tiling t = 1;  // empty set
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const std::uint32_t mask = ((1u << (j + 1)) - 1) & ~((1u << i) - 1);
      t |= Tiling{1} << mask;
    }
  }
  return t;
}

bool on_boundary(std::uint32_t s, int k) {
  const std::uint32_t full = (1u << k) - 1;
  // Prefixes {0..i} and suffixes {i..k-1}.
  return ((s + 1) & s) == 0 || (((full & ~s) + 1) & (full & ~s)) == 0;
}

std::vector<Tiling> flip_neighbors(Tiling t, int k) {
  std::vector<Tiling> out;
  auto has = [&](std::uint32_t s) { return (t >> s) & 1u; };
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    if (!has(s) || on_boundary(s, k)) continue;
    std::vector<std::uint32_t> dirs;
    for (int d = 0; d < k; ++d) {
      if (has(s ^ (1u << d))) dirs.push_back(1u << d);
    }
    if (dirs.size() != 3) continue;
    const std::uint32_t a = dirs[0], b = dirs[1], c = dirs[2];
    if (!has(s ^ a ^ b) || !has(s ^ b ^ c) || !has(s ^ a ^ c) || has(s ^ a ^ b ^ c)) continue;
    out.push_back((t & ~(Tiling{1} << s)) | (Tiling{1} << (s ^ a ^ b ^ c)));
  }
  return out;
}

MatchstickGraph realize(Tiling t, int k) {
  Point center{0, 0};
  std::vector<Point> dir(k);
  for (int d = 0; d < k; ++d) {
    dir[d] = zonotope_direction(k, d);
    center = center + 0.5 * dir[d];
  }
  std::vector<std::uint32_t> labels;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    if ((t >> s) & 1u) labels.push_back(s);
  }
  std::vector<Point> pts;
  for (std::uint32_t s : labels) {
    Point p = Point{0, 0} - center;
    for (int d = 0; d < k; ++d) {
      if (s & (1u << d)) p = p + dir[d];
    }
    pts.push_back(p);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (std::popcount(labels[a] ^ labels[b]) == 1) {
        edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
      }
    }
  }
  return MatchstickGraph(std::move(pts), std::move(edges));
}

template <class Visit>
bool explore_tilings(int k, std::uint64_t budget, Visit visit) {
  std::unordered_set<Tiling> seen{interval_labels(k)};
  std::vector<Tiling> stack{interval_labels(k)};
  while (!stack.empty()) {
    const Tiling t = stack.back();
    stack.pop_back();
    visit(t);
    for (Tiling next : flip_neighbors(t, k)) {
      if (seen.insert(next).second) {
        if (seen.size() > budget) return false;
        stack.push_back(next);
      }
    }
  }
  return true;
}

SearchResult zonotope_flips(int n, std::uint64_t budget) {
  const int k = zonotope_k_for(n);
  if (k < 2 || k > 6) {
    throw Error(ErrorCode::InvalidArgument,
                "zonotope_flips needs n = C(k+1,2)+1 with 2 <= k <= 6");
  }
  SearchResult out;
  out.family = FamilyName::zonotope_flips;
  out.n = n;
  const bool complete = explore_tilings(k, budget, [&](Tiling t) {
    ++out.evaluated;
    const MatchstickGraph g = realize(t, k);
    if (acceptable(g)) consider(out, g);
  });
  out.exhaustive = complete;
  if (!complete) throw BudgetExceeded(out);
  return out;
}

SearchResult augmentation_variants(int n, std::uint64_t budget) {
  SearchResult out;
  out.family = FamilyName::augmentation_variants;
  out.n = n;
  const auto base = triangle_free_construction(n);
  const int k = base.base_k;
  const int j = base.added;
  if (k < 2 || j == 0) {
    out.evaluated = 1;
    consider(out, base.graph);
    out.exhaustive = true;
    return out;
  }
  const MatchstickGraph z = gen_zonotope(k);
  const auto fd = enumerate_faces(z);
  std::vector<VertexId> ring = face_vertices(z, fd, fd.outer_face);
  const int len = static_cast<int>(ring.size());
  const TolerancePolicy pol;

  for (int start = 0; start < len; ++start) {
    for (int dir : {1, -1}) {
      if (out.evaluated >= budget) throw BudgetExceeded(out);
      ++out.evaluated;
      auto at = [&](int i) { return ring[((start + dir * i) % len + len) % len]; };
      const Point d_in = z.vertex(at(0)) - z.vertex(at(-1));
      const Point d_out = z.vertex(at(1)) - z.vertex(at(0));
      const Point sum = d_in + d_out;
      if (norm(sum) < 1e-6) continue;
      const Point w = (1.0 / norm(sum)) * sum;

      std::vector<Point> pts = z.vertices();
      std::vector<Edge> edges = z.edges();
      for (int t = 1; t <= j; ++t) {
        const auto v = static_cast<VertexId>(pts.size());
        pts.push_back(z.vertex(at(t - 1)) + w);
        edges.push_back({at(t - 1), v});
        if (t > 1) edges.push_back({v - 1, v});
      }
      MatchstickGraph plain(pts, edges);
      if (!acceptable(plain)) continue;
      // Any further unit distances created by the new vertices are free
      // edges as long as the drawing stays valid and triangle-free.
      MatchstickGraph grown = plain;
      for (auto [a, b] : kernels::distance_window_pairs_parallel(pts, 1 - pol.unit_tol,
                                                                  1 + pol.unit_tol)) {
        if (b < z.num_vertices() || grown.find_edge(a, b)) continue;
        auto more = grown.edges();
        more.push_back({a, b});
        MatchstickGraph trial(pts, std::move(more));
        if (acceptable(trial)) grown = std::move(trial);
      }
      consider(out, grown);
    }
  }
  out.exhaustive = true;
  if (out.best_e < 0) consider(out, base.graph);
  return out;
}

}  // namespace

SearchResult max_edges_over_family(const CandidateFamily& fam, int n, std::uint64_t budget) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  switch (fam.name) {
    case FamilyName::lattice_window: return lattice_window(fam.window, n, budget);
    case FamilyName::zonotope_flips: return zonotope_flips(n, budget);
    case FamilyName::augmentation_variants: return augmentation_variants(n, budget);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

std::uint64_t count_zonotope_tilings(int k, std::uint64_t budget) {
  if (k < 2 || k > 6) throw Error(ErrorCode::InvalidArgument, "k must lie in 2..6");
  std::uint64_t count = 0;
  if (!explore_tilings(k, budget, [&](Tiling) { ++count; })) {
    throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " tilings");
  }
  return count;
}

std::vector<ProbeRow> conjecture_probe(int n_max, std::uint64_t budget) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be positive");
  std::vector<ProbeRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    ProbeRow row;
    row.n = n;
    row.conjecture = bound_conjecture(n);
    row.thm1_upper = bound_thm1_upper(n);
    row.witness = gen_triangle_free(n);
    row.best_e = static_cast<std::int64_t>(row.witness.num_edges());
    row.best_source = "construction";

    auto take = [&](const SearchResult& r) {
      row.families.push_back({r.family, r.best_e, r.exhaustive});
      if (r.best_e > row.best_e) {
        row.best_e = r.best_e;
        row.best_source = std::string(to_string(r.family));
        row.witness = r.witness;
      }
    };
    if (n <= 25 && kernels::binomial(25, n) <= budget) {
      take(max_edges_over_family({FamilyName::lattice_window, 5}, n, budget));
    }
    const int k = zonotope_k_for(n);
    if (k >= 2 && k <= 6) take(max_edges_over_family({FamilyName::zonotope_flips}, n, budget));
    take(max_edges_over_family({FamilyName::augmentation_variants}, n, budget));

    if (!acceptable(row.witness) || row.witness.num_vertices() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::InvariantViolation, "probe witness failed validation");
    }
    if (static_cast<double>(row.best_e) > row.thm1_upper) {
      throw Error(ErrorCode::InvariantViolation,
                  "n = " + std::to_string(n) + ": witness beats the upper bound");
    }
    row.status = row.best_e < row.conjecture   ? ProbeStatus::below
                 : row.best_e > row.conjecture ? ProbeStatus::above
                                               : ProbeStatus::equal;
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const SearchResult& r) {
  return {{"family", to_string(r.family)}, {"n", r.n},
          {"best_e", r.best_e},            {"exhaustive", r.exhaustive},
          {"evaluated", r.evaluated},      {"lower_bound_only", true}};
}

nlohmann::json to_json(const std::vector<ProbeRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : row.families) {
      fams.push_back({{"family", to_string(f.family)},
                      {"best_e", f.best_e},
                      {"exhaustive", f.exhaustive}});
    }
    out.push_back({{"n", row.n},
                   {"best_e", row.best_e},
                   {"best_source", row.best_source},
                   {"conjecture", row.conjecture},
                   {"thm1_upper", row.thm1_upper},
                   {"status", to_string(row.status)},
                   {"families", fams}});
  }
  return out;
}

}  // namespace matchstick
