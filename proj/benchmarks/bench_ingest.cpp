// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "citemetric/ingest.hpp"

namespace {

const char* const kWords[] = {"estudio", "efecto",  "clima",  "especies", "bosque", "análisis", "salud",
                              "población", "caribe", "suelo", "café",     "río",    "evaluación", "modelo"};

std::vector<citemetric::ArticleRecord> records(std::size_t n) {
  std::mt19937_64 rng(n);
  std::vector<citemetric::ArticleRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    citemetric::ArticleRecord r;
    r.journal_id = "j1";
    r.line = i + 2;
    if (i > 0 && rng() % 10 == 0) {
      r.title = out[rng() % out.size()].title + ".";
    } else {
      for (int w = 0; w < 6; ++w) r.title += std::string(kWords[rng() % 14]) + " ";
    }
    r.year = 2003 + static_cast<int>(rng() % 5);
    r.cites = rng() % 30;
    out.push_back(r);
  }
  return out;
}

void BM_Deduplicate(benchmark::State& state) {
  const auto recs = records(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(citemetric::deduplicate(recs, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Deduplicate)->Arg(50)->Arg(200)->Arg(800);

}  // namespace
