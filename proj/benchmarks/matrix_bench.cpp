// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dmkit/delta_matroid.hpp"
#include "dmkit/skew_matrix.hpp"

namespace {

dmkit::SkewMatrix random_matrix(std::size_t n, dmkit::Rng& rng) {
  const auto f = dmkit::FieldCtx::make(64);
  std::vector<dmkit::Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  dmkit::SkewMatrix a(f, labels);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a.set_raw(i, j, f.random(rng).value());
  }
  return a;
}

void BM_Pfaffian(benchmark::State& state) {
  dmkit::Rng rng(3);
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.pfaffian());
}
BENCHMARK(BM_Pfaffian)->RangeMultiplier(2)->Range(8, 128);

void BM_Pivot(benchmark::State& state) {
  dmkit::Rng rng(4);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, rng);
  dmkit::LabelSet s;
  for (std::size_t i = 0; i < n / 2; ++i) s.insert("e" + std::to_string(2 * i));
  if (s.size() % 2 == 1) s.erase(s.begin());
  for (auto _ : state) benchmark::DoNotOptimize(a.pivot(s));
}
BENCHMARK(BM_Pivot)->RangeMultiplier(2)->Range(8, 128);

void BM_FeasibilityQuery(benchmark::State& state) {
  dmkit::Rng rng(5);
  const auto d = dmkit::DeltaMatroid(random_matrix(64, rng));
  dmkit::LabelSet s;
  for (int i = 0; i < 32; ++i) s.insert("e" + std::to_string(i));
  for (auto _ : state) benchmark::DoNotOptimize(dmkit::is_feasible(d, s));
}
BENCHMARK(BM_FeasibilityQuery);

}  // namespace

BENCHMARK_MAIN();
