#include <benchmark/benchmark.h>

#include <vector>

#include "adderbound/bounds.hpp"
#include "adderbound/codebook.hpp"
#include "adderbound/pipeline.hpp"
#include "adderbound/rng.hpp"
#include "adderbound/sps.hpp"

namespace {

using namespace adderbound;

// Deterministic pseudo-random codebook with distinct words.
Codebook random_codebook(int n, std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<word_t> words;
  std::vector<bool> used(std::size_t{1} << n, false);
  while (words.size() < size) {
    word_t w = rng.uniform_int(0, (1 << n) - 1);
    if (!used[w]) {
      used[w] = true;
      words.push_back(w);
    }
  }
  return Codebook(n, std::move(words));
}

void BM_Theorem1Endpoint(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(theorem1_bound(1.0));
  }
}
BENCHMARK(BM_Theorem1Endpoint)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_RSigma(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_sigma(0.2, 0.5));
  }
}
BENCHMARK(BM_RSigma)->Unit(benchmark::kMillisecond);

void BM_SumsetVerify(benchmark::State& state) {
  Codebook c1 = random_codebook(12, 64, 1);
  Codebook c2 = random_codebook(12, 64, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_zero_error_pair(c1, c2));
  }
}
BENCHMARK(BM_SumsetVerify)->Unit(benchmark::kMicrosecond);

void BM_MaxShattered(benchmark::State& state) {
  Codebook ball = hamming_ball(12, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_k_shattered(ball, 1));
  }
}
BENCHMARK(BM_MaxShattered)->Unit(benchmark::kMillisecond);

void BM_ShiftToMonotone(benchmark::State& state) {
  Rng rng(3);
  std::vector<word_t> sets;
  std::vector<bool> used(1 << 10, false);
  while (sets.size() < 200) {
    word_t w = rng.uniform_int(0, (1 << 10) - 1);
    if (!used[w]) {
      used[w] = true;
      sets.push_back(w);
    }
  }
  SubsetFamily f = make_family(10, sets);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shift_to_monotone(f));
  }
}
BENCHMARK(BM_ShiftToMonotone)->Unit(benchmark::kMicrosecond);

void BM_ExhaustiveSearch3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_max_pair(3));
  }
}
BENCHMARK(BM_ExhaustiveSearch3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
