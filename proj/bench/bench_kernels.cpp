#include <benchmark/benchmark.h>

#include <map>

#include "matchstick/faces.hpp"
#include "matchstick/generators.hpp"
#include "matchstick/kernels.hpp"
#include "matchstick/pathfinder.hpp"

using namespace matchstick;

namespace {

const MatchstickGraph& lattice(int n) {
  static std::map<int, MatchstickGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_disk_lattice(4, n).graph).first;
  return it->second;
}

void BM_CrossingSerial(benchmark::State& st) {
  const auto& g = lattice(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::crossing_pairs_serial(g, {}));
}

void BM_CrossingParallel(benchmark::State& st) {
  const auto& g = lattice(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::crossing_pairs_parallel(g, {}));
}

void BM_UnitPairsSerial(benchmark::State& st) {
  const auto& g = lattice(int(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::distance_window_pairs_serial(g.vertices(), 1 - 1e-9, 1 + 1e-9));
  }
}

void BM_UnitPairsParallel(benchmark::State& st) {
  const auto& g = lattice(int(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        kernels::distance_window_pairs_parallel(g.vertices(), 1 - 1e-9, 1 + 1e-9));
  }
}

struct Neighborhood {
  kernels::Incidence inc;
  std::vector<bool> target;
};

Neighborhood neighborhood(int n) {
  const auto core = drop_isolated(lattice(n)).graph;
  const auto fd = enumerate_faces(core);
  Neighborhood out{build_neighborhood(fd, core.num_edges()).incidence, {}};
  out.target.assign(core.num_edges(), false);
  out.target[0] = true;  // one far target makes every BFS long
  return out;
}

void BM_NearestSerial(benchmark::State& st) {
  const auto nb = neighborhood(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::nearest_target_serial(nb.inc, nb.target));
}

void BM_NearestParallel(benchmark::State& st) {
  const auto nb = neighborhood(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::nearest_target_parallel(nb.inc, nb.target));
}

void BM_WindowSerial(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::best_window_subset_serial(5, int(st.range(0)), ~0ull));
  }
}

void BM_WindowParallel(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernels::best_window_subset_parallel(5, int(st.range(0)), ~0ull));
  }
}

}  // namespace

BENCHMARK(BM_CrossingSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingParallel)->Arg(500)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitPairsSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitPairsParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestSerial)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestParallel)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindowSerial)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindowParallel)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
