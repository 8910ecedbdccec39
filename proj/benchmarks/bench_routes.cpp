/*
 * Copyright 2026 The bernkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "bernkit/bernoulli.hpp"
#include "bernkit/elliptic.hpp"
#include "bernkit/kdv.hpp"
#include "bernkit/quadrature.hpp"
#include "bernkit/tangent.hpp"

namespace {

void BM_BernoulliOracleTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    bernkit::BernoulliTable table;  // fresh table: measures the full recurrence
    benchmark::DoNotOptimize(table.at(n));
  }
}
BENCHMARK(BM_BernoulliOracleTable)->Arg(32)->Arg(64)->Arg(128);

void BM_TangentSeq(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    bernkit::TangentSeq seq;
    benchmark::DoNotOptimize(seq.at(n));
  }
}
BENCHMARK(BM_TangentSeq)->Arg(20)->Arg(40);

void BM_ExactMainIntegral(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernkit::exact_main_integral(m));
}
BENCHMARK(BM_ExactMainIntegral)->Arg(4)->Arg(10);

void BM_BuildDensities(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernkit::build_densities(m));
}
BENCHMARK(BM_BuildDensities)->Arg(3)->Arg(5)->Arg(6);

void BM_BernoulliNumeric(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernkit::bernoulli_numeric(m));
}
BENCHMARK(BM_BernoulliNumeric)->Arg(1)->Arg(8);

void BM_WpLaurentSymbolic(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernkit::wp_laurent_symbolic(k));
}
BENCHMARK(BM_WpLaurentSymbolic)->Arg(10)->Arg(20);

void BM_BellNumeric(benchmark::State& state) {
  const bernkit::RectLattice l{1.0, 0.8};
  const auto nodes = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernkit::bell_numeric(l, 2, nodes));
}
BENCHMARK(BM_BellNumeric)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
