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

#include "conefix/cone_metric_space.hpp"
#include "conefix/corpus.hpp"
#include "conefix/fixed_point_checks.hpp"
#include "conefix/picard.hpp"

using namespace conefix;

namespace {

void BM_PicardLogRoot(benchmark::State &state)
{
  const auto &pair = find_entry("E2")->pair;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(picard_solve(pair, 0.5, 0, 0.5, Real(1e-10)));
  }
}
BENCHMARK(BM_PicardLogRoot)->Unit(benchmark::kMicrosecond);

void BM_PicardTolerance(benchmark::State &state)
{
  const auto &pair = find_entry("C-Banach")->pair;
  const Real  tol  = pow(Real(10), -Real(state.range(0)));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(picard_solve(pair, 0.5, 0, 1.0, tol));
  }
}
BENCHMARK(BM_PicardTolerance)->DenseRange(4, 24, 4)->Unit(benchmark::kMicrosecond);

void BM_Uniqueness(benchmark::State &state)
{
  const auto &pair  = find_entry("C-TKannan")->pair;
  const auto  seeds = pair.domain().grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(verify_uniqueness(pair, 0, Real(1) / 3, seeds, Real(1e-10)));
  }
}
BENCHMARK(BM_Uniqueness)->Arg(5)->Arg(50)->Unit(benchmark::kMicrosecond);

void BM_MetricAxioms(benchmark::State &state)
{
  const auto space = exp_weighted_space("exp", PointDomain::interval(0, 1));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(check_metric_axioms(space, static_cast<std::size_t>(state.range(0)), 42));
  }
}
BENCHMARK(BM_MetricAxioms)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
