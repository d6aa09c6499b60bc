#include "matchstick/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "matchstick/error.hpp"
#include "matchstick/generators.hpp"
#include "matchstick/reduction.hpp"

namespace matchstick {

std::int64_t big_F(const FaceDecomposition& fd) {
  std::int64_t F = 0;
  for (const auto& [len, count] : fd.f) {
    if (len >= 5) F += static_cast<std::int64_t>((len - 4) * count);
  }
  return F;
}

IdentityChecks verify_identities(const MatchstickGraph& g, const FaceDecomposition& fd) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const auto e = static_cast<std::int64_t>(g.num_edges());
  IdentityChecks out;
  std::int64_t weighted = 0, faces = 0;
  std::size_t shortest = SIZE_MAX;
  for (const auto& [len, count] : fd.f) {
    weighted += static_cast<std::int64_t>(len * count);
    faces += static_cast<std::int64_t>(count);
    shortest = std::min(shortest, len);
  }
  out.eq1 = {true, weighted == 2 * e, weighted, 2 * e};
  out.eq2 = {true, n - e + faces == 2, n - e + faces, 2};
  const std::int64_t rhs3 = 4 * n - 8 - big_F(fd);
  out.eq3 = {shortest >= 4, 2 * e == rhs3, 2 * e, rhs3};
  return out;
}

IdentityChecks verify_identities(const MatchstickGraph& g, const TolerancePolicy& pol) {
  return verify_identities(g, enumerate_faces(g, pol));
}

ChainSet rhombus_chains(const MatchstickGraph& g, const FaceDecomposition& fd,
                        const std::vector<FaceClass>& classes) {
  ChainSet out;
  out.chains_of_face.resize(fd.num_faces());
  std::vector<std::array<bool, 2>> used(fd.num_faces(), {false, false});
  auto rhombic = [&](FaceId f) { return f != fd.outer_face && classes[f].rhombic(); };
  auto slot = [&](FaceId f, HalfEdgeId h) {
    const auto& w = fd.faces[f];
    return static_cast<int>(std::find(w.begin(), w.end(), h) - w.begin());
  };

  // Walks across `rail` (a half-edge of the current face) for as long as the
  // face on the other side is an unused rhombus.
  auto walk = [&](HalfEdgeId rail, std::vector<EdgeId>& rails, std::vector<FaceId>& faces) {
    while (true) {
      const HalfEdgeId across = twin(rail);
      const FaceId next = fd.face_of[across];
      if (!rhombic(next)) return;
      const int q = slot(next, across);
      if (used[next][q % 2]) return;
      used[next][q % 2] = true;
      faces.push_back(next);
      rail = fd.faces[next][(q + 2) % 4];
      rails.push_back(edge_of(rail));
    }
  };

  for (FaceId f = 0; f < fd.num_faces(); ++f) {
    if (!rhombic(f)) continue;
    ++out.rhombic_faces;
    const auto& w = fd.faces[f];
    for (int c = 0; c < 2; ++c) {
      if (used[f][c]) continue;
      used[f][c] = true;
      std::vector<EdgeId> back_rails, fwd_rails;
      std::vector<FaceId> back_faces, fwd_faces;
      walk(w[c], back_rails, back_faces);
      walk(w[c + 2], fwd_rails, fwd_faces);

      RhombusChain ch;
      ch.rails.assign(back_rails.rbegin(), back_rails.rend());
      ch.rails.push_back(edge_of(w[c]));
      ch.rails.push_back(edge_of(w[c + 2]));
      ch.rails.insert(ch.rails.end(), fwd_rails.begin(), fwd_rails.end());
      ch.rhombi.assign(back_faces.rbegin(), back_faces.rend());
      ch.rhombi.push_back(f);
      ch.rhombi.insert(ch.rhombi.end(), fwd_faces.begin(), fwd_faces.end());
      if (ch.rails.front() > ch.rails.back()) {
        std::reverse(ch.rails.begin(), ch.rails.end());
        std::reverse(ch.rhombi.begin(), ch.rhombi.end());
      }
      const Edge e0 = g.edge(ch.rails.front());
      Point v = g.vertex(e0.v) - g.vertex(e0.u);
      if (v.y < 0 || (v.y == 0 && v.x < 0)) v = -1.0 * v;
      ch.direction = v;

      const std::size_t id = out.chains.size();
      for (FaceId r : ch.rhombi) out.chains_of_face[r].push_back(id);
      out.chains.push_back(std::move(ch));
    }
  }
  return out;
}

ChainInequalities chain_inequalities(const FaceDecomposition& fd, const ChainSet& chains) {
  ChainInequalities q;
  const auto C = static_cast<std::int64_t>(chains.C());
  q.f4 = static_cast<std::int64_t>(chains.rhombic_faces);
  q.c_choose_2 = C * (C - 1) / 2;
  q.eq4 = q.f4 <= q.c_choose_2;
  q.two_c = 2 * C;
  for (const auto& [len, count] : fd.f) {
    if (len >= 5) q.sum_i_fi += static_cast<std::int64_t>(len * count);
  }
  q.five_F = 5 * big_F(fd);
  q.eq5_left = q.two_c <= q.sum_i_fi;
  q.eq5_right = q.sum_i_fi <= q.five_F;
  q.eq5_in_hypothesis = fd.boundary_length[fd.outer_face] >= 5;
  return q;
}

ChainOverlapResult chain_overlap_check(const ChainSet& chains) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FaceId>> shared;
  for (FaceId f = 0; f < chains.chains_of_face.size(); ++f) {
    const auto& list = chains.chains_of_face[f];
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        shared[{std::min(list[i], list[j]), std::max(list[i], list[j])}].push_back(f);
      }
    }
  }
  ChainOverlapResult out;
  for (auto& [key, faces] : shared) {
    if (faces.size() >= 2) {
      out.pass = false;
      out.witnesses.push_back({key.first, key.second, faces});
    }
  }
  return out;
}

IrregularEdges irregular_edge_count(const MatchstickGraph& g, const FaceDecomposition& fd,
                                    const std::vector<FaceClass>& classes) {
  IrregularEdges out;
  const auto e = static_cast<std::int64_t>(g.num_edges());
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  out.irregular.assign(g.num_edges(), false);
  std::int64_t f4 = 0;
  for (FaceId f = 0; f < fd.num_faces(); ++f) {
    if (f != fd.outer_face && classes[f].rhombic()) ++f4;
  }
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    for (HalfEdgeId h : {2 * id, 2 * id + 1}) {
      const FaceId f = fd.face_of[h];
      if (f == fd.outer_face || !classes[f].rhombic()) out.irregular[id] = true;
    }
    if (out.irregular[id]) ++out.e_star;
  }
  out.two_e_minus_4f4 = 2 * e - 4 * f4;
  out.two_n_minus_tenth = 2.0 * static_cast<double>(n) - static_cast<double>(out.e_star) / 10.0;
  out.sides_hold = out.two_e_minus_4f4 >= out.e_star;
  out.bound_holds = 10 * e <= 20 * n - out.e_star + 10;
  return out;
}

double bound_thm1_upper(double n) { return 2 * n - std::numbers::sqrt2 / 5 * std::sqrt(n); }
double bound_thm1_lower(double n) { return 2 * n - std::numbers::sqrt2 * std::sqrt(n); }
std::int64_t bound_conjecture(std::int64_t n) { return triangle_free_edge_target(n); }

Thm2Bound bound_thm2(double r, double n) {
  if (!(r > 0) || !std::isfinite(r)) throw Error(ErrorCode::NonpositiveRadius, "radius must be positive");
  Thm2Bound b;
  b.lower_coeff = 2 - 5 / r;
  b.log10_eps2 = -(std::log10(20.0) + 16 * r * r * std::log10(3.0));
  b.additive = 100 * std::pow(r, 4) + 8 * r * r;
  b.upper_value = (2 - std::pow(10.0, b.log10_eps2)) * n + b.additive;
  return b;
}

AnalysisReport analyze(const MatchstickGraph& g, std::optional<double> r,
                       const TolerancePolicy& pol) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::InvalidArgument, "empty graph");
  AnalysisReport rep;
  rep.n = g.num_vertices();
  rep.e = g.num_edges();
  rep.r = r;
  CoreGraph core = drop_isolated(g);
  if (core.graph.num_vertices() == 0) {
    core.graph = MatchstickGraph({g.vertex(0)}, {});
    core.isolated = g.num_vertices() - 1;
  }
  rep.n_core = core.graph.num_vertices();
  rep.isolated = core.isolated;

  const auto fd = enumerate_faces(core.graph, pol);
  const auto classes = classify_faces(core.graph, fd, r, pol);
  const auto chains = rhombus_chains(core.graph, fd, classes);
  rep.f = fd.f;
  rep.outer_length = fd.boundary_length[fd.outer_face];
  rep.rhombic_face_count = chains.rhombic_faces;
  rep.F = big_F(fd);
  rep.C = chains.C();
  rep.identities = verify_identities(core.graph, fd);
  rep.inequalities = chain_inequalities(fd, chains);
  rep.chain_overlap_ok = chain_overlap_check(chains).pass;
  rep.eq6 = irregular_edge_count(core.graph, fd, classes);
  rep.e_star = rep.eq6.e_star;
  if (r) rep.reduction = to_json(reduce(g, *r, pol));
  return rep;
}

namespace {

nlohmann::json to_json(const IdentityCheck& c) {
  return {{"applicable", c.applicable}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& rep) {
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [len, count] : rep.f) f[std::to_string(len)] = count;
  const auto& q = rep.inequalities;
  const double n = static_cast<double>(rep.n);
  nlohmann::json bounds = {
      {"thm1_upper", bound_thm1_upper(n)},
      {"thm1_lower", bound_thm1_lower(n)},
      {"conjecture", bound_conjecture(static_cast<std::int64_t>(rep.n))},
  };
  if (rep.r) {
    const auto b = bound_thm2(*rep.r, n);
    bounds["thm2"] = {{"r", *rep.r},
                      {"lower_coeff", b.lower_coeff},
                      {"log10_eps2", b.log10_eps2},
                      {"additive", b.additive},
                      {"upper_value", b.upper_value}};
  }
  return {
      {"n", rep.n},
      {"n_core", rep.n_core},
      {"isolated", rep.isolated},
      {"e", rep.e},
      {"f", f},
      {"outer_length", rep.outer_length},
      {"rhombic_face_count", rep.rhombic_face_count},
      {"F", rep.F},
      {"C", rep.C},
      {"e_star", rep.e_star},
      {"identities",
       {{"eq1", to_json(rep.identities.eq1)},
        {"eq2", to_json(rep.identities.eq2)},
        {"eq3", to_json(rep.identities.eq3)}}},
      {"inequalities",
       {{"eq4", {{"f4", q.f4}, {"c_choose_2", q.c_choose_2}, {"holds", q.eq4}}},
        {"eq5",
         {{"two_c", q.two_c},
          {"sum_i_fi", q.sum_i_fi},
          {"five_F", q.five_F},
          {"left_holds", q.eq5_left},
          {"right_holds", q.eq5_right},
          {"in_hypothesis", q.eq5_in_hypothesis}}},
        {"eq6",
         {{"two_e_minus_4f4", rep.eq6.two_e_minus_4f4},
          {"e_star", rep.eq6.e_star},
          {"two_n_minus_tenth", rep.eq6.two_n_minus_tenth},
          {"sides_hold", rep.eq6.sides_hold},
          {"bound_holds", rep.eq6.bound_holds}}},
        {"chain_overlap", rep.chain_overlap_ok}}},
      {"bounds", bounds},
      {"reduction", rep.reduction},
  };
}

}  // namespace matchstick
