/* Copyright 2026 The RankSeg Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
// Microbenchmarks for the count distribution and the volume search.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rankseg/rankseg.hpp"

namespace {

using namespace rankseg;

// Beta(0.5, 0.5) probabilities: plenty of mass near both ends.
SuccessProbVector diffuse(std::size_t d) {
  std::mt19937_64 eng(d);
  std::gamma_distribution<double> g(0.5, 1.0);
  std::vector<double> v(d);
  for (auto& x : v) {
    const double a = g(eng), b = g(eng);
    x = a / (a + b);
  }
  return SuccessProbVector(v);
}

void BM_PmfDp(benchmark::State& st) {
  const auto q = diffuse(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(pb_pmf_exact(q, q.size()));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_PmfDp)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_PmfFft(benchmark::State& st) {
  const auto q = diffuse(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(pb_pmf_fft(q));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_PmfFft)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

template <Algorithm A>
void BM_Search(benchmark::State& st) {
  const auto q = diffuse(static_cast<std::size_t>(st.range(0)));
  RankSegConfig cfg;
  cfg.algorithm = A;
  for (auto _ : st) benchmark::DoNotOptimize(predict_dice(q, cfg, true));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Search<Algorithm::exact>)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_Search<Algorithm::trna>)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_Search<Algorithm::ba>)->RangeMultiplier(4)->Range(256, 65536);

void BM_SearchIou(benchmark::State& st) {
  const auto q = diffuse(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(predict_iou(q, RankSegConfig{}, true));
}
BENCHMARK(BM_SearchIou)->RangeMultiplier(4)->Range(256, 4096);

}  // namespace

BENCHMARK_MAIN();
