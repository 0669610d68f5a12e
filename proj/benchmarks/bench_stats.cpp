// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "citemetric/statkit.hpp"

namespace {

namespace st = citemetric::stats;

std::vector<std::vector<double>> columns(std::size_t p, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::vector<std::vector<double>> cols(p, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double common = z(rng);
    for (std::size_t j = 0; j < p; ++j) cols[j][i] = common + z(rng);
  }
  return cols;
}

void BM_Ols(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto cols = columns(3, n, 1);
  const std::vector<double> y = cols.back();
  cols.pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(st::ols_fit(y, cols));
}
BENCHMARK(BM_Ols)->Arg(50)->Arg(500)->Arg(5000);

void BM_Pca(benchmark::State& state) {
  const auto m = st::Matrix::from_columns(columns(static_cast<std::size_t>(state.range(0)), 200, 2));
  for (auto _ : state) benchmark::DoNotOptimize(st::pca_unrotated(m));
}
BENCHMARK(BM_Pca)->Arg(3)->Arg(8);

void BM_Spearman(benchmark::State& state) {
  const auto cols = columns(2, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(st::spearman(cols[0], cols[1]));
}
BENCHMARK(BM_Spearman)->Arg(100)->Arg(10000);

void BM_TailT(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x = x > 8 ? 0.0 : x + 0.01;
    benchmark::DoNotOptimize(st::tail_probability(st::Distribution::t(57), x));
  }
}
BENCHMARK(BM_TailT);

void BM_TailF(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x = x > 20 ? 0.0 : x + 0.05;
    benchmark::DoNotOptimize(st::tail_probability(st::Distribution::f(3, 107), x));
  }
}
BENCHMARK(BM_TailF);

void BM_TailChiSq(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x = x > 30 ? 0.0 : x + 0.05;
    benchmark::DoNotOptimize(st::tail_probability(st::Distribution::chi_squared(3), x));
  }
}
BENCHMARK(BM_TailChiSq);

void BM_Tukey(benchmark::State& state) {
  const auto g = columns(4, 30, 4);
  for (auto _ : state) benchmark::DoNotOptimize(st::tukey_groups(g));
}
BENCHMARK(BM_Tukey);

}  // namespace
