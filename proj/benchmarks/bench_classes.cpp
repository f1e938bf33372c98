//------------------------------------------------------------------------------
//
//   Copyright 2026 The conefix Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "conefix/certify.hpp"
#include "conefix/constraints.hpp"
#include "conefix/fit.hpp"

using namespace conefix;

namespace {

const MappingPair &specimen(int index)
{
  return corpus().at(static_cast<std::size_t>(index)).pair;
}

void BM_BuildConstraints(benchmark::State &state)
{
  const auto &pair    = find_entry("E2")->pair;
  const auto  samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(build_constraints(pair, samples, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildConstraints)->RangeMultiplier(4)->Range(500, 32000)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State &state)
{
  const auto set = build_constraints(find_entry("E2")->pair, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(certify(set, 0.5, 0));
  }
}
BENCHMARK(BM_Certify)->RangeMultiplier(4)->Range(500, 32000)->Unit(benchmark::kMicrosecond);

void BM_FitPerSpecimen(benchmark::State &state)
{
  const auto &pair = specimen(static_cast<int>(state.range(0)));
  const auto  set  = build_constraints(pair, 2000, 42);
  state.SetLabel(pair.label());
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(fit_min_ab(set));
  }
}
BENCHMARK(BM_FitPerSpecimen)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_FitScaling(benchmark::State &state)
{
  const auto set = build_constraints(find_entry("C-Nova")->pair, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(fit_min_ab(set));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(set.constraints.size()));
}
BENCHMARK(BM_FitScaling)->RangeMultiplier(2)->Range(500, 16000)->Complexity()->Unit(benchmark::kMillisecond);

}  // namespace
