#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matchstick/error.hpp"
#include "matchstick/graph.hpp"

namespace matchstick {

// Restricted families of triangle-free matchstick graphs. Every result is a
// certified lower bound for the extremal edge count, never an upper bound.
enum class FamilyName { lattice_window, zonotope_flips, augmentation_variants };
std::string_view to_string(FamilyName f);
/// Accepts "lattice_window" or "lattice-window" etc. Throws InvalidArgument.
FamilyName family_from_string(std::string_view s);

struct CandidateFamily {
  FamilyName name = FamilyName::lattice_window;
  int window = 5;  // lattice_window: side of the square block
};

struct SearchResult {
  FamilyName family = FamilyName::lattice_window;
  int n = 0;
  std::int64_t best_e = -1;
  MatchstickGraph witness;
  bool exhaustive = false;
  std::uint64_t evaluated = 0;
};

/// Thrown when the budget runs out; carries the best graph found so far.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(SearchResult best)
      : Error(ErrorCode::BudgetExceeded, "search budget exhausted"), best_(std::move(best)) {}
  const SearchResult& best() const { return best_; }

 private:
  SearchResult best_;
};

/// Best member of the family with n vertices. `budget` bounds the number
/// of candidates (subsets, tilings or variants) examined.
///   lattice_window: n-subsets of a window x window block of Z^2.
///   zonotope_flips: all rhombic tilings of the 2k-gon reachable by flips
///                   (n must be C(k+1,2)+1 with 2 <= k <= 6).
///   augmentation_variants: a partial boundary strip around the zonotope,
///                   started at every boundary vertex in both directions.
SearchResult max_edges_over_family(const CandidateFamily& fam, int n, std::uint64_t budget);

/// Number of rhombic tilings of the regular 2k-gon reached from the
/// interval tiling by flips (k <= 6).
std::uint64_t count_zonotope_tilings(int k, std::uint64_t budget);

enum class ProbeStatus { below, equal, above };
std::string_view to_string(ProbeStatus s);

struct FamilyOutcome {
  FamilyName family;
  std::int64_t best_e = -1;
  bool exhaustive = false;
};

struct ProbeRow {
  int n = 0;
  std::int64_t best_e = 0;
  std::string best_source;   // family name or "construction"
  std::int64_t conjecture = 0;
  double thm1_upper = 0.0;
  ProbeStatus status = ProbeStatus::equal;
  std::vector<FamilyOutcome> families;
  MatchstickGraph witness;
};

/// One row per n in 1..n_max: the best of every applicable family and the
/// triangle-free construction. Throws InvariantViolation if any witness
/// beats 2n - (sqrt2/5) sqrt n.
std::vector<ProbeRow> conjecture_probe(int n_max, std::uint64_t budget = 20'000'000);

nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const std::vector<ProbeRow>& rows);

}  // namespace matchstick
