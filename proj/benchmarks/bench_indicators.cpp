// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "citemetric/indicators.hpp"

namespace {

std::vector<std::uint64_t> cites(std::size_t n) {
  std::mt19937_64 rng(n);
  std::geometric_distribution<std::uint64_t> dist(0.15);
  std::vector<std::uint64_t> v(n);
  for (auto& c : v) c = dist(rng);
  return v;
}

void BM_HIndex(benchmark::State& state) {
  const auto v = cites(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(citemetric::h_index(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HIndex)->RangeMultiplier(8)->Range(8, 32768);

void BM_AreaCpn(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<citemetric::IndicatorSet> sets(static_cast<std::size_t>(state.range(0)));
  for (auto& s : sets) {
    s.air_ibnp = 1 + rng() % 400;
    s.cr_ga = rng() % 3000;
    s.ca_mean = static_cast<double>(s.cr_ga) / static_cast<double>(s.air_ibnp);
  }
  sets[0].cr_ga += 1;
  sets[0].ca_mean = static_cast<double>(sets[0].cr_ga) / static_cast<double>(sets[0].air_ibnp);
  for (auto _ : state) {
    const auto area = citemetric::area_mean_citation(sets);
    double acc = 0;
    for (const auto& s : sets) acc += citemetric::cpn(s, area);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_AreaCpn)->Arg(111)->Arg(1000);

}  // namespace
