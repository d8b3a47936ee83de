// Copyright 2026 The fixlab Authors
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

#include "fixlab/channel.hpp"
#include "fixlab/commuting.hpp"
#include "fixlab/cuntz.hpp"
#include "fixlab/inequalities.hpp"
#include "fixlab/random.hpp"

namespace {

using namespace fixlab;

void BM_Superoperator(benchmark::State& state) {
  Stream rng(1, 0);
  const KrausFamily k = random_unital_channel(rng, state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(superoperator(k).matrix.data());
}
BENCHMARK(BM_Superoperator)->Arg(4)->Arg(8)->Arg(16);

void BM_FixedSpace(benchmark::State& state) {
  Stream rng(2, 0);
  const KrausFamily k = random_unital_channel(rng, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_space(k).size());
}
BENCHMARK(BM_FixedSpace)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_GeneralizedPs(benchmark::State& state) {
  Stream rng(3, 0);
  const Eigen::Index n = state.range(0);
  const Matrix b = random::gaussian(rng, n, n + 1);
  const Matrix x = random::psd(rng, n);
  const Matrix y = random::psd(rng, n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_ps(b, x, y).slack);
}
BENCHMARK(BM_GeneralizedPs)->Arg(4)->Arg(8);

void BM_IntertwinerCheck(benchmark::State& state) {
  Stream rng(4, 0);
  const Eigen::Index n = state.range(0);
  const auto a = commuting::random_commuting_normal(rng, n, 3, commuting::Completeness::row);
  const auto b = commuting::random_partner(rng, a, n);
  for (auto _ : state) benchmark::DoNotOptimize(commuting::intertwiner_check(a, b, fix_tol(n * n), 1e-7).passed);
}
BENCHMARK(BM_IntertwinerCheck)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CuntzExperiment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cuntz::experiment(state.range(0)).gap.sigma_min);
}
BENCHMARK(BM_CuntzExperiment)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
