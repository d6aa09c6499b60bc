#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "matchstick/faces.hpp"
#include "matchstick/graph.hpp"

namespace matchstick {

/// F = sum over faces of (len - 4) for len >= 5, outer face included.
std::int64_t big_F(const FaceDecomposition& fd);

struct IdentityCheck {
  bool applicable = true;
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

// eq1: sum len * f_len = 2e. eq2: n - e + faces = 2.
// eq3: 2e = 4n - 8 - F, only applicable when every face has length >= 4.
struct IdentityChecks {
  IdentityCheck eq1;
  IdentityCheck eq2;
  IdentityCheck eq3;

  bool all_hold() const {
    return eq1.holds && eq2.holds && (!eq3.applicable || eq3.holds);
  }
};

IdentityChecks verify_identities(const MatchstickGraph& g, const FaceDecomposition& fd);
/// Computes the faces itself; throws Disconnected.
IdentityChecks verify_identities(const MatchstickGraph& g, const TolerancePolicy& pol = {});

struct RhombusChain {
  Point direction;                // rail vector, angle in [0, pi)
  std::vector<EdgeId> rails;      // in chain order, rails.front() < rails.back()
  std::vector<FaceId> rhombi;     // rhombi[i] lies between rails[i] and rails[i+1]
};

struct ChainSet {
  std::vector<RhombusChain> chains;
  std::size_t rhombic_faces = 0;
  // For every face, the chains through it (empty for non-rhombic faces).
  std::vector<std::vector<std::size_t>> chains_of_face;

  std::size_t C() const { return chains.size(); }
};

/// All maximal rhombus chains of a classified decomposition, one per
/// equivalence class. Fat and thin rhombi both count as rhombic.
ChainSet rhombus_chains(const MatchstickGraph& g, const FaceDecomposition& fd,
                        const std::vector<FaceClass>& classes);

struct ChainInequalities {
  std::int64_t f4 = 0;          // rhombic faces
  std::int64_t c_choose_2 = 0;
  bool eq4 = false;
  std::int64_t two_c = 0;
  std::int64_t sum_i_fi = 0;    // sum over len >= 5 of len * f_len
  std::int64_t five_F = 0;
  bool eq5_left = false;
  bool eq5_right = false;
  // The chain argument assumes a large outer face; with a 4-walk (or
  // shorter) outer face the eq5 sides are reported but not expected to hold.
  bool eq5_in_hypothesis = false;
};

ChainInequalities chain_inequalities(const FaceDecomposition& fd, const ChainSet& chains);

struct ChainOverlap {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<FaceId> shared;
};

struct ChainOverlapResult {
  bool pass = true;
  std::vector<ChainOverlap> witnesses;
};

/// Passes iff no two distinct maximal chains share two or more rhombi.
ChainOverlapResult chain_overlap_check(const ChainSet& chains);

struct IrregularEdges {
  std::vector<bool> irregular;      // per edge
  std::int64_t e_star = 0;
  std::int64_t two_e_minus_4f4 = 0;
  double two_n_minus_tenth = 0.0;   // 2n - e*/10
  bool sides_hold = false;          // 2e - 4 f4 >= e*
  bool bound_holds = false;         // e <= 2n - e*/10 + 1, i.e. 10e <= 20n - e* + 10
};

/// An edge is irregular when one of its faces is not rhombic.
IrregularEdges irregular_edge_count(const MatchstickGraph& g, const FaceDecomposition& fd,
                                    const std::vector<FaceClass>& classes);

double bound_thm1_upper(double n);           // 2n - (sqrt2/5) sqrt n
double bound_thm1_lower(double n);           // 2n - sqrt2 sqrt n, O(1) omitted
std::int64_t bound_conjecture(std::int64_t n);  // floor(2n - sqrt(2n - 7/4) - 3/2)

struct Thm2Bound {
  double lower_coeff = 0.0;    // 2 - 5/r
  double log10_eps2 = 0.0;     // eps2 = 1 / (20 * 3^(16 r^2))
  double additive = 0.0;       // 100 r^4 + 8 r^2
  double upper_value = 0.0;    // (2 - eps2) n + additive
};

/// Throws NonpositiveRadius.
Thm2Bound bound_thm2(double r, double n);

struct AnalysisReport {
  std::size_t n = 0;        // all vertices
  std::size_t n_core = 0;   // vertices of positive degree (or 1 for an edgeless graph)
  std::size_t isolated = 0;
  std::size_t e = 0;
  std::map<std::size_t, std::size_t> f;
  std::size_t rhombic_face_count = 0;
  std::size_t outer_length = 0;
  std::int64_t F = 0;
  std::size_t C = 0;
  std::int64_t e_star = 0;
  IdentityChecks identities;
  ChainInequalities inequalities;
  bool chain_overlap_ok = true;
  IrregularEdges eq6;
  std::optional<double> r;
  nlohmann::json reduction;  // null unless r is given
};

/// Full report. Isolated vertices are set aside (they have no faces); the
/// rest must be connected. With `r`, the reduction pipeline runs as well.
AnalysisReport analyze(const MatchstickGraph& g, std::optional<double> r = std::nullopt,
                       const TolerancePolicy& pol = {});

nlohmann::json to_json(const AnalysisReport& rep);

}  // namespace matchstick
