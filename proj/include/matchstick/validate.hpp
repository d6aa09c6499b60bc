#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

enum class Check { unit_lengths, noncrossing, simple, connected, triangle_free, disk_contained };
enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(Check c);
std::string_view to_string(CheckStatus s);

inline const std::set<Check> kAllChecks = {Check::unit_lengths, Check::noncrossing,
                                           Check::simple,       Check::connected,
                                           Check::triangle_free, Check::disk_contained};

/// The checks every matchstick drawing must pass.
inline const std::set<Check> kMatchstickChecks = {Check::unit_lengths, Check::noncrossing,
                                                  Check::simple};

struct Violation {
  Check check;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::string reason;
};

struct ValidationReport {
  std::map<Check, CheckStatus> status;
  std::vector<Violation> violations;

  CheckStatus operator[](Check c) const;
  /// True iff no requested check failed.
  bool ok() const;
};

/// Runs the requested checks; problems are reported, never thrown.
/// `disk_contained` uses the graph's disk and is skipped when none is set.
/// Triangle-freeness is over adjacency (no 3-cycle subgraph at all).
ValidationReport validate(const MatchstickGraph& g, const TolerancePolicy& pol,
                          const std::set<Check>& checks = kAllChecks);

struct DegreeProfile {
  std::map<std::size_t, std::size_t> histogram;
  bool connected = false;
};

DegreeProfile degree_profile(const MatchstickGraph& g);

}  // namespace matchstick
