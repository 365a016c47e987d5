// Copyright 2026 The chimera-dyn Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include "chimera_dyn/chimera_dyn.hpp"

namespace {

using namespace chimera_dyn;

void BM_GearyFullChip(benchmark::State& state) {
  const QubitGraph g = generate_chimera(16, 16, 4);
  const AttributeSet attrs = synthesize_attributes(g, SyntheticModel::Iid, 1);
  const auto& beta = attrs.attributes.at("beta");
  for (auto _ : state) benchmark::DoNotOptimize(geary_c(beta, g.edges()));
}
BENCHMARK(BM_GearyFullChip);

void BM_GearyReportFullChip(benchmark::State& state) {
  const QubitGraph g = generate_chimera(16, 16, 4);
  const AttributeSet attrs = synthesize_attributes(g, SyntheticModel::Smooth, 1);
  for (auto _ : state) {
    auto r = geary_report(attrs, g);
    benchmark::DoNotOptimize(r.attributes.size());
  }
}
BENCHMARK(BM_GearyReportFullChip)->Unit(benchmark::kMillisecond);

void BM_Permutation(benchmark::State& state) {
  const QubitGraph g = generate_chimera(16, 16, 4);
  const AttributeSet attrs = synthesize_attributes(g, SyntheticModel::Iid, 2);
  const auto& beta = attrs.attributes.at("beta");
  for (auto _ : state) {
    auto r = geary_permutation_test(beta, g.edges(), static_cast<std::size_t>(state.range(0)), 5);
    benchmark::DoNotOptimize(r.p_value);
  }
}
BENCHMARK(BM_Permutation)->Arg(99)->Arg(999)->Unit(benchmark::kMillisecond);

}  // namespace
