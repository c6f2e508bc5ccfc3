#include <benchmark/benchmark.h>

#include <map>

#include "wormkit/census.hpp"
#include "wormkit/generators.hpp"
#include "wormkit/travel.hpp"
#include "wormkit/worms.hpp"

namespace {

using namespace wormkit;

MultigridSpec pentagrid(double radius) { return {5, {0.2, 0.2, 0.2, 0.2, 0.2}, radius, 0}; }

const Patch& cached_patch(double radius) {
  static std::map<double, Patch> cache;
  auto it = cache.find(radius);
  if (it == cache.end()) it = cache.emplace(radius, gen_multigrid(pentagrid(radius)).patch).first;
  return it->second;
}

void BM_GenMultigrid(benchmark::State& state) {
  const double radius = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_multigrid(pentagrid(radius)));
  state.counters["tiles"] = static_cast<double>(cached_patch(radius).tile_count());
}
BENCHMARK(BM_GenMultigrid)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_AllWorms(benchmark::State& state) {
  const Patch& p = cached_patch(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_worms(p));
}
BENCHMARK(BM_AllWorms)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_CrossingLemma(benchmark::State& state) {
  const Patch& p = cached_patch(static_cast<double>(state.range(0)));
  const WormIndex idx = all_worms(p);
  for (auto _ : state) benchmark::DoNotOptimize(check_crossing_lemma(p, idx));
}
BENCHMARK(BM_CrossingLemma)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_ConeLemma(benchmark::State& state) {
  const Patch& p = cached_patch(static_cast<double>(state.range(0)));
  const WormIndex idx = all_worms(p);
  for (auto _ : state) benchmark::DoNotOptimize(check_cone_lemma(p, idx));
}
BENCHMARK(BM_ConeLemma)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  const Patch& p = cached_patch(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(p));
}
BENCHMARK(BM_Validate)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_TravelConstructive(benchmark::State& state) {
  const Patch& p = cached_patch(9);
  const WormIndex idx = all_worms(p);
  const TileId s{0}, t{static_cast<std::int32_t>(p.tile_count() / 2)};
  for (auto _ : state) benchmark::DoNotOptimize(travel_constructive(p, idx, s, t));
}
BENCHMARK(BM_TravelConstructive)->Unit(benchmark::kMicrosecond);

void BM_TravelBfs(benchmark::State& state) {
  const Patch& p = cached_patch(9);
  const WormGraph g = build_worm_graph(p, all_worms(p));
  const TileId s{0}, t{static_cast<std::int32_t>(p.tile_count() / 2)};
  for (auto _ : state) benchmark::DoNotOptimize(travel_bfs(g, s, t));
}
BENCHMARK(BM_TravelBfs)->Unit(benchmark::kMicrosecond);

void BM_Census(benchmark::State& state) {
  const Patch& p = cached_patch(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orientation_census(p));
}
BENCHMARK(BM_Census)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_OrientationBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orientation_bound(10, state.range(0)));
}
BENCHMARK(BM_OrientationBound)->Arg(20)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
