// Copyright 2026 The Libra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "fixtures.h"
#include "libra/evaluator.h"
#include "libra/pipeline.h"

namespace libra {
namespace {

const EventLog& Log() {
  static const EventLog log = testing::SepsisScaleLog();
  return log;
}

PrivacyConfig Config() {
  PrivacyConfig config;
  config.alpha = 10;
  config.seed = 1;
  return config;
}

void BM_RoundsSerial(benchmark::State& state) {
  const auto rounds = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunRoundsSerial(Log(), Config(), *Log().epoch(), rounds, {}));
  }
  state.SetItemsProcessed(state.iterations() * rounds);
}
BENCHMARK(BM_RoundsSerial)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RoundsParallel(benchmark::State& state) {
  const auto rounds = state.range(0);
  const auto threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunRoundsParallel(Log(), Config(), *Log().epoch(), rounds, {}, threads));
  }
  state.SetItemsProcessed(state.iterations() * rounds);
}
BENCHMARK(BM_RoundsParallel)
    ->ArgsProduct({{20, 100}, {2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_EmdFrequency(benchmark::State& state) {
  const Dfg a = BuildDfg(Log());
  const Dfg b = BuildDfg(Run(Log(), Config()).anonymized_log);
  for (auto _ : state) benchmark::DoNotOptimize(EmdFrequency(a, b));
}
BENCHMARK(BM_EmdFrequency);

}  // namespace
}  // namespace libra

BENCHMARK_MAIN();
