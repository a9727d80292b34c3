#include <benchmark/benchmark.h>

#include "tmotif/features.hpp"
#include "tmotif/motif_counter.hpp"
#include "tmotif/motif_oracle.hpp"
#include "tmotif/random.hpp"
#include "tmotif/synth.hpp"

namespace {

using namespace tmotif;

TemporalGraph random_small(std::size_t events, std::uint64_t seed) {
  Rng rng(seed);
  TemporalGraph::Builder b;
  for (std::size_t i = 0; i < events; ++i) {
    const auto u = rng.below(12), v = rng.below(12);
    b.add_event("n" + std::to_string(u), "n" + std::to_string(v), static_cast<Timestamp>(rng.below(events * 2)));
  }
  return std::move(b).build();
}

const SynthData& mercari() {
  static const SynthData data = generate(preset_config("mercari-outburst"));
  return data;
}

void BM_CountIndexed(benchmark::State& state) {
  const auto g = random_small(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_motifs(g, 20));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountIndexed)->Arg(30)->Arg(100)->Arg(200);

void BM_CountOracle(benchmark::State& state) {
  const auto g = random_small(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_motifs_oracle(g, 20));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountOracle)->Arg(30)->Arg(100)->Arg(200);

void BM_CountSynth(benchmark::State& state) {
  const auto& g = mercari().graph;
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_motifs(g, 3600, MotifOrder::Both, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.event_count()));
}
BENCHMARK(BM_CountSynth)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EgoFeatureMatrix(benchmark::State& state) {
  const auto& g = mercari().graph;
  const auto nodes = active_nodes(g);
  for (auto _ : state) benchmark::DoNotOptimize(ego_feature_matrix(g, nodes, 3600));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(nodes.size()));
}
BENCHMARK(BM_EgoFeatureMatrix)->Unit(benchmark::kMillisecond);

void BM_SimpleFeatureMatrix(benchmark::State& state) {
  const auto& g = mercari().graph;
  const auto nodes = active_nodes(g);
  for (auto _ : state) benchmark::DoNotOptimize(simple_feature_matrix(g, nodes));
}
BENCHMARK(BM_SimpleFeatureMatrix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
