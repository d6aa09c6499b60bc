// Command-line front end. Every subcommand is a thin wrapper over the
// library; exit codes: 0 ok, 1 validation or domain failure, 2 usage.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchstick/analysis.hpp"
#include "matchstick/error.hpp"
#include "matchstick/faces.hpp"
#include "matchstick/generators.hpp"
#include "matchstick/io.hpp"
#include "matchstick/pathfinder.hpp"
#include "matchstick/reduction.hpp"
#include "matchstick/render.hpp"
#include "matchstick/search.hpp"
#include "matchstick/validate.hpp"

using namespace matchstick;
using nlohmann::json;

namespace {

constexpr const char* kGrammar = R"(usage:
  matchstick generate {grid --k K | zonotope --k K | triangle-free --n N |
                       disk-lattice --r R --n N | strip --count C --theta T [--tilt T]} -o FILE
  matchstick validate FILE [--tol E] [--triangle-free] [--disk R]
  matchstick analyze FILE [--r R] [-o REPORT.json]
  matchstick reduce FILE --r R -o FILE
  matchstick extend-path FILE [--edge I J] --r R [-o TRACE.json] [--seed S]
  matchstick search {probe --n-max N | family --name NAME --n N --budget B} [-o OUT.json]
  matchstick render FILE -o FILE.svg [--faces] [--disk]
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_text_file(out, j.dump(2) + "\n");
  }
}

json report_json(const ValidationReport& rep) {
  json checks = json::object();
  for (const auto& [c, s] : rep.status) checks[std::string(to_string(c))] = to_string(s);
  json violations = json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"check", to_string(v.check)},
                          {"vertices", v.vertices},
                          {"edges", v.edges},
                          {"reason", v.reason}});
  }
  return {{"ok", rep.ok()}, {"checks", checks}, {"violations", violations}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchstick graph constructions, checks and analysis"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a construction as a graph file");
  gen->require_subcommand(1);
  int k = 0, n = 0, count = 0;
  double r = 0.0, theta = 0.0, tilt = 0.0;
  std::string out;
  auto* g_grid = gen->add_subcommand("grid", "k x k lattice piece");
  g_grid->add_option("--k", k)->required();
  auto* g_zono = gen->add_subcommand("zonotope", "rhombic tiling of the regular 2k-gon");
  g_zono->add_option("--k", k)->required();
  auto* g_tf = gen->add_subcommand("triangle-free", "triangle-free construction on n vertices");
  g_tf->add_option("--n", n)->required();
  auto* g_disk = gen->add_subcommand("disk-lattice", "dense lattice strip inside a disk");
  g_disk->add_option("--r", r)->required();
  g_disk->add_option("--n", n)->required();
  auto* g_strip = gen->add_subcommand("strip", "a single chain of congruent rhombi");
  g_strip->add_option("--count", count)->required();
  g_strip->add_option("--theta", theta)->required();
  g_strip->add_option("--tilt", tilt);
  for (auto* sub : {g_grid, g_zono, g_tf, g_disk, g_strip}) {
    sub->add_option("-o,--output", out)->required();
  }

  // validate
  std::string file;
  double tol = 1e-9, disk_r = 0.0;
  bool triangle_free = false;
  auto* val = app.add_subcommand("validate", "check the matchstick conditions");
  val->add_option("file", file)->required();
  auto* tol_opt = val->add_option("--tol", tol);
  val->add_flag("--triangle-free", triangle_free);
  auto* disk_opt = val->add_option("--disk", disk_r);

  // analyze
  auto* ana = app.add_subcommand("analyze", "faces, identities, chains and bounds");
  ana->add_option("file", file)->required();
  auto* ana_r = ana->add_option("--r", r);
  ana->add_option("-o,--output", out);

  // reduce
  auto* red = app.add_subcommand("reduce", "strip triangles and fat rhombi");
  red->add_option("file", file)->required();
  red->add_option("--r", r)->required();
  red->add_option("-o,--output", out)->required();

  // extend-path
  std::vector<std::uint32_t> edge_ij;
  std::uint64_t seed = 0;
  auto* ext = app.add_subcommand("extend-path", "trace the monotone path procedure");
  ext->add_option("file", file)->required();
  ext->add_option("--edge", edge_ij)->expected(2);
  ext->add_option("--r", r)->required();
  ext->add_option("-o,--output", out);
  ext->add_option("--seed", seed, "picks the start edge when --edge is absent");

  // search
  auto* sea = app.add_subcommand("search", "extremal search over restricted families");
  sea->require_subcommand(1);
  int n_max = 0, window = 5;
  std::uint64_t budget = 20'000'000;
  std::string family, witness;
  auto* s_probe = sea->add_subcommand("probe", "best known edge counts for n <= n_max");
  s_probe->add_option("--n-max", n_max)->required();
  s_probe->add_option("--budget", budget);
  auto* s_fam = sea->add_subcommand("family", "best member of one family");
  s_fam->add_option("--name", family)->required();
  s_fam->add_option("--n", n)->required();
  s_fam->add_option("--budget", budget)->required();
  s_fam->add_option("--window", window);
  s_fam->add_option("--witness", witness, "write the best graph here");
  for (auto* sub : {s_probe, s_fam}) sub->add_option("-o,--output", out);

  // render
  bool faces = false, disk = false;
  auto* ren = app.add_subcommand("render", "draw a graph file as SVG");
  ren->add_option("file", file)->required();
  ren->add_option("-o,--output", out)->required();
  ren->add_flag("--faces", faces);
  ren->add_flag("--disk", disk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n" << kGrammar;
    return 2;
  }

  try {
    if (*gen) {
      MatchstickGraph g;
      if (*g_grid) g = gen_grid(k);
      if (*g_zono) g = gen_zonotope(k);
      if (*g_tf) g = gen_triangle_free(n);
      if (*g_disk) g = gen_disk_lattice(r, n).graph;
      if (*g_strip) g = gen_rhombus_strip(count, theta, tilt);
      save_graph(g, out);
      return 0;
    }
    if (*val) {
      TolerancePolicy pol;
      if (*tol_opt) {
        pol.unit_tol = tol;
        pol.geom_tol = std::min(pol.geom_tol, tol / 10);
        require_sane(pol);
      }
      MatchstickGraph g = load_graph(file);
      std::set<Check> checks = kMatchstickChecks;
      if (triangle_free) checks.insert(Check::triangle_free);
      if (*disk_opt) {
        if (!(disk_r > 0)) throw Error(ErrorCode::NonpositiveRadius, "--disk needs r > 0");
        g = g.with_disk(DiskSpec{g.disk() ? g.disk()->center : Point{}, disk_r});
        checks.insert(Check::disk_contained);
      }
      const auto rep = validate(g, pol, checks);
      std::cout << report_json(rep).dump(2) << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*ana) {
      const auto g = load_graph(file);
      emit(to_json(analyze(g, *ana_r ? std::optional(r) : std::nullopt)), out);
      return 0;
    }
    if (*red) {
      const auto trace = reduce(load_graph(file), r);
      save_graph(trace.after_fat_rhombi, out);
      std::cout << to_json(trace).dump(2) << "\n";
      return 0;
    }
    if (*ext) {
      const auto g = load_graph(file);
      EdgeId alpha = 0;
      if (!edge_ij.empty()) {
        const auto id = g.find_edge(edge_ij[0], edge_ij[1]);
        if (!id) throw Error(ErrorCode::UnknownEdge, "no edge between the given vertices");
        alpha = *id;
      } else {
        if (g.num_edges() == 0) throw Error(ErrorCode::UnknownEdge, "graph has no edges");
        const auto core = drop_isolated(g);
        const auto fd = enumerate_faces(core.graph);
        const auto irr = irregular_edge_count(core.graph, fd, classify_faces(core.graph, fd, r));
        std::vector<EdgeId> pool;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          if (!irr.irregular[e]) pool.push_back(e);
        }
        if (pool.empty()) {
          for (EdgeId e = 0; e < g.num_edges(); ++e) pool.push_back(e);
        }
        std::mt19937_64 rng(seed);
        alpha = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      }
      const auto trace = extend_path(g, alpha, r);
      emit(to_json(trace), out);
      return trace.result == PathResult::found_irregular ? 0 : 1;
    }
    if (*sea) {
      if (*s_probe) {
        emit(to_json(conjecture_probe(n_max, budget)), out);
        return 0;
      }
      const auto res =
          max_edges_over_family({family_from_string(family), window}, n, budget);
      if (!witness.empty()) save_graph(res.witness, witness);
      emit(to_json(res), out);
      return 0;
    }
    if (*ren) {
      const auto g = load_graph(file);
      RenderStyle style;
      style.disk_outline = disk;
      style.face_colors = faces;
      std::optional<FaceDecomposition> fd;
      if (faces) {
        const auto core = drop_isolated(g);
        if (core.isolated == 0) fd = enumerate_faces(g);
      }
      write_text_file(out, render_svg(g, fd ? &*fd : nullptr, style));
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    json err = {{"error", to_string(e.code())}, {"message", e.what()}, {"best", to_json(e.best())}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  std::cerr << kGrammar;
  return 2;
}
