#include <benchmark/benchmark.h>

#include "imatch/fourwise.hpp"
#include "imatch/generators.hpp"
#include "imatch/matching.hpp"
#include "imatch/pipeline.hpp"
#include "imatch/sparsify.hpp"

namespace {

void BM_EnumerateTriangles(benchmark::State& state) {
  const auto g = imatch::random_regular(static_cast<std::size_t>(state.range(0)), 20, 1);
  for (auto _ : state) benchmark::DoNotOptimize(imatch::count_triangles(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_EnumerateTriangles)->Arg(1000)->Arg(10000);

void BM_MisraGries(benchmark::State& state) {
  const auto g = imatch::projective_incidence_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(imatch::misra_gries_edge_color(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_MisraGries)->Arg(7)->Arg(13)->Arg(31);

void BM_Pipeline(benchmark::State& state) {
  const auto g = imatch::projective_incidence_graph(static_cast<std::uint32_t>(state.range(0)));
  imatch::PipelineConfig config;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(imatch::induced_matching(g, config));
  }
}
BENCHMARK(BM_Pipeline)->Arg(7)->Arg(13)->Arg(31);

void BM_SparsifyAttempt(benchmark::State& state) {
  const auto g = imatch::random_regular(10000, 20, 2);
  const auto params = imatch::lemma_params(20, 1.5);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(imatch::sparsify_attempt(g, params, seed++));
}
BENCHMARK(BM_SparsifyAttempt);

void BM_FourWiseSample(benchmark::State& state) {
  const auto g = imatch::named_fixture("edgeless-1024");
  const imatch::FourWiseSampler sampler(10, {3, 141, 59, 265});
  for (auto _ : state) benchmark::DoNotOptimize(imatch::fourwise_sample(g, 0.25, sampler));
}
BENCHMARK(BM_FourWiseSample);

}  // namespace

BENCHMARK_MAIN();
