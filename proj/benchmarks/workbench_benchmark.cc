// Copyright 2026 The fluxring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "fluxring/workbench/commands.h"
#include "fluxring/workbench/config.h"
#include "fluxring/workbench/report.h"

namespace fluxring::workbench {
namespace {

const char* const kDesign = FLUXRING_SOURCE_DIR "/tools/configs/paper-design.yaml";

void BM_LoadConfig(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_config(kDesign));
}
BENCHMARK(BM_LoadConfig);

void BM_FeasibilityJson(benchmark::State& state) {
  const DesignConfig config = load_config(kDesign);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(cmd_feasibility(config), OutputFormat::kJson));
  }
}
BENCHMARK(BM_FeasibilityJson);

void BM_RabiSweep(benchmark::State& state) {
  const DesignConfig config = load_config(kDesign);
  RabiOptions options;
  options.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cmd_rabi(config, options));
}
BENCHMARK(BM_RabiSweep)->Arg(9)->Arg(101);

}  // namespace
}  // namespace fluxring::workbench

BENCHMARK_MAIN();
