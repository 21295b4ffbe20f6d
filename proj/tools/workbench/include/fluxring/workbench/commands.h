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

#ifndef FLUXRING_WORKBENCH_COMMANDS_H_
#define FLUXRING_WORKBENCH_COMMANDS_H_

#include <optional>

#include "fluxring/dynamics.h"
#include "fluxring/workbench/config.h"
#include "fluxring/workbench/report.h"

namespace fluxring::workbench {

// Derived design quantities and the model's validity checks:
//   thin wire       w/2 < lambda_L and d/2 < lambda_L
//   penetration     skin depth >= d pass, in [d/2, d) marginal, else fail
//   sub-wavelength  d < lambda / 20
//   dipole formula  d_R >= 10 r (only with a two_qubit section)
Report cmd_feasibility(const DesignConfig& config);

struct SpectrumOptions {
  int levels = 4;  // rows for |n| <= levels
};
Report cmd_spectrum(const DesignConfig& config, const SpectrumOptions& options = {});

struct SelectionOptions {
  int initial_level = 0;
};
Report cmd_selection(const DesignConfig& config, const SelectionOptions& options = {});

// Rabi frequency over a logarithmic intensity sweep at the configured drive
// frequency and intensity convention.
struct RabiOptions {
  double intensity_min = 0.66;    // W/m^2
  double intensity_max = 6600.0;  // W/m^2
  int points = 9;
};
Report cmd_rabi(const DesignConfig& config, const RabiOptions& options = {});

// Overrides for the simulation section.
struct DynamicsOptions {
  std::optional<double> t_final;
  std::optional<EvolutionMode> mode;
  std::optional<int> samples;
};
Report cmd_dynamics(const DesignConfig& config, const DynamicsOptions& options = {});

// Controlled phase and CZ fidelity on a uniform grid over [0, span * t_CZ];
// an odd point count puts t_CZ itself on the grid for span = 2.
struct CzGateOptions {
  int points = 21;
  double span = 2.0;
};
Report cmd_czgate(const DesignConfig& config, const CzGateOptions& options = {});

}  // namespace fluxring::workbench

#endif  // FLUXRING_WORKBENCH_COMMANDS_H_
