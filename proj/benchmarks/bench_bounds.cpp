#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "discbound/discbound.hpp"

namespace {

using namespace discbound;

std::vector<double> linear(std::size_t m) {
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<double>(i);
  return v;
}

std::vector<double> power(std::size_t m) {
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) {
    v[i] = std::exp2(20.0 * static_cast<double>(i) / static_cast<double>(m));
  }
  return v;
}

void BM_BinomCdf(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(binom_cdf(n, n / 3, 0.31));
}
BENCHMARK(BM_BinomCdf)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_InvertUpper(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_upper({.n = n, .k = n / 3, .delta = 0.05}));
  }
}
BENCHMARK(BM_InvertUpper)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_NestTwoSided(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const CategorizedSample s(std::vector<std::int64_t>(m, 10), linear(m));
  for (auto _ : state) benchmark::DoNotOptimize(nest_bounds(s, 0.05, Side::two_sided));
}
BENCHMARK(BM_NestTwoSided)->Arg(10)->Arg(100);

void BM_BoxTwoSided(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const CategorizedSample s(std::vector<std::int64_t>(m, 10), linear(m));
  for (auto _ : state) benchmark::DoNotOptimize(box_bounds(s, 0.05, Side::two_sided));
}
BENCHMARK(BM_BoxTwoSided)->Arg(10)->Arg(100);

void BM_MergePlan(benchmark::State& state) {
  const auto v = power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(merge_plan(v, v.size() / 2));
}
BENCHMARK(BM_MergePlan)->Arg(100)->Arg(400);

void BM_NuCorrection(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::vector<double> p(m, 1.0 / static_cast<double>(m));
  const auto v = linear(m);
  for (auto _ : state) benchmark::DoNotOptimize(nu_correction(p, v, 16));
}
BENCHMARK(BM_NuCorrection)->Arg(100)->Arg(1000);

void BM_SampleMultinomial(benchmark::State& state) {
  const auto d = TrueDistribution::uniform(linear(10));
  auto rng = trial_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_multinomial(1000, d, rng));
}
BENCHMARK(BM_SampleMultinomial);

}  // namespace

BENCHMARK_MAIN();
