// Copyright 2026 The Arndt Compositions Authors
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

#include "arndt/closed_forms.h"
#include "arndt/enumerator.h"
#include "arndt/gf_catalog.h"
#include "arndt/power_series.h"

namespace {

void BM_StreamArndt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    for (const auto& c : arndt::members_of(n, arndt::FamilySpec::arndt())) {
      benchmark::DoNotOptimize(c);
      ++count;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_StreamArndt)->Arg(12)->Arg(16)->Arg(20);

void BM_BruteForceStats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        arndt::brute_force_stats(n, arndt::FamilySpec::arndt()));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << (n - 1)));
}
BENCHMARK(BM_BruteForceStats)
    ->Arg(16)
    ->Arg(20)
    ->Arg(24)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_ExpandArndt(benchmark::State& state) {
  const auto f = arndt::gf::arndt();
  for (auto _ : state) {
    benchmark::DoNotOptimize(arndt::expand(f, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ExpandArndt)->Arg(16)->Arg(40)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_ExpandBlock(benchmark::State& state) {
  const auto f = arndt::gf::k_block(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arndt::expand(f, 40));
}
BENCHMARK(BM_ExpandBlock)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_BuildBlockGF(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(arndt::gf::k_block(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildBlockGF)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_RecurrenceTriangle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        arndt::a_recurrence_triangle(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_RecurrenceTriangle)->Arg(40)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_AlternatingSumRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int m = 0; m <= n; ++m) {
      benchmark::DoNotOptimize(arndt::a_sum_alternating(n, m));
    }
  }
}
BENCHMARK(BM_AlternatingSumRow)->Arg(40)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_LastPartClosedTriangle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        arndt::b_closed_triangle(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_LastPartClosedTriangle)->Arg(40)->Arg(200)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
