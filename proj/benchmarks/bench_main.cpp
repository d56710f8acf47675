#include <benchmark/benchmark.h>

#include "rmlab/erasure.hpp"
#include "rmlab/error_patterns.hpp"
#include "rmlab/rng.hpp"
#include "rmlab/spectrum.hpp"

using namespace rmlab;

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const BitMatrix a = BitMatrix::random(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_EvalMatrix(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_matrix(m, m / 2));
}
BENCHMARK(BM_EvalMatrix)->DenseRange(6, 12, 2);

static void BM_EnumerateWeights(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto r = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weights(m, r));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << dimension(m, r)));
}
BENCHMARK(BM_EnumerateWeights)->Args({5, 2})->Args({6, 2})->Args({10, 1})->Unit(benchmark::kMillisecond);

static void BM_ErasureCorrectable(benchmark::State& state) {
  const unsigned m = 10;
  const BitMatrix h = eval_matrix(m, 2);
  Rng rng(2);
  const Pattern s = sample_pattern(CorruptionModel::uniform(static_cast<double>(state.range(0))), h.cols(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(erasure_correctable(h, s));
}
BENCHMARK(BM_ErasureCorrectable)->Arg(16)->Arg(40);

static void BM_CollisionSearch(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const BitMatrix h = eval_matrix(m, 3);
  std::vector<std::size_t> basis;
  for (unsigned i = 0; i < m; ++i) basis.push_back(std::size_t{1} << i);
  const Pattern u(std::size_t{1} << m, basis);
  for (auto _ : state) benchmark::DoNotOptimize(unique_error_decodable(h, u));
}
BENCHMARK(BM_CollisionSearch)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_McErasure(benchmark::State& state) {
  const RmCode code(8, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_erasure_success(code, CorruptionModel::iid(0.05), 1000, kDefaultSeed));
  }
}
BENCHMARK(BM_McErasure)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
