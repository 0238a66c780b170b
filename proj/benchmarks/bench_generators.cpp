#include <benchmark/benchmark.h>

#include "graycode/binary.hpp"
#include "graycode/combinations.hpp"
#include "graycode/permutations.hpp"
#include "graycode/qary.hpp"
#include "graycode/verify.hpp"

using namespace graycode;

static void BM_ComplementaryBinary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binary::complementary_even(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ComplementaryBinary)->DenseRange(12, 20, 4);

static void BM_QuasiComplementaryLee(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::int64_t words = 0;
  for (auto _ : state) {
    const Code c = qary::quasi_complementary_lee(q, n);
    words = static_cast<std::int64_t>(c.size());
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations() * words);
}
BENCHMARK(BM_QuasiComplementaryLee)->Args({3, 7})->Args({5, 6})->Args({4, 8});

static void BM_LeeMissing(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qary::quasi_complementary_lee_missing(q, n));
}
BENCHMARK(BM_LeeMissing)->Args({4, 5})->Args({6, 5});

static void BM_ComplementarySubsets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(combinations::complementary_subsets(n));
}
BENCHMARK(BM_ComplementarySubsets)->DenseRange(5, 9, 2);

static void BM_ReversePermutations(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(permutations::reverse_perm_code(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(permutations::factorial(n)));
}
BENCHMARK(BM_ReversePermutations)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_StreamingReverseCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(permutations::verify_reverse_stream(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(permutations::factorial(n) / 2));
}
BENCHMARK(BM_StreamingReverseCheck)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_VerifyLee(benchmark::State& state) {
  const Code c = qary::quasi_complementary_lee(5, 8);
  CodeSpec spec;
  spec.metric = Metric::Lee;
  spec.require_cyclic = true;
  spec.universe = Universe::all(5, 8);
  spec.pairing = Pairing{PairingRule::AddDiagonal, 1, {static_cast<std::int64_t>(c.size() / 5)}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_code(c, spec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}
BENCHMARK(BM_VerifyLee)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
