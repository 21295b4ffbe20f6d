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

#ifndef FLUXRING_WORKBENCH_CONFIG_H_
#define FLUXRING_WORKBENCH_CONFIG_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fluxring/beam.h"
#include "fluxring/dynamics.h"
#include "fluxring/ring.h"
#include "fluxring/two_qubit.h"

namespace fluxring::workbench {

// Malformed config text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& reason);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UnknownKey : public std::runtime_error {
 public:
  UnknownKey(const std::string& source, const std::string& key, int line, int column);
  const std::string& key() const { return key_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string key_;
  int line_;
  int column_;
};

// A command needs a config section that was left out.
class MissingSection : public std::runtime_error {
 public:
  explicit MissingSection(const std::string& section);
  const std::string& section() const { return section_; }

 private:
  std::string section_;
};

struct BeamConfig {
  int oam_index = 1;
  // linear-x, linear-y, right-circular, left-circular or jones.
  std::string polarization = "linear-x";
  std::complex<double> jones_x{1.0, 0.0};
  std::complex<double> jones_y{0.0, 0.0};
  // Exactly one of amplitude (|A0|) and intensity is set.
  std::optional<double> amplitude;  // V*s/m
  std::optional<double> intensity;  // W/m^2
  double phase = 0.0;               // arg A0, rad
  double detuning = 0.0;            // omega - omega_{2,0}, rad/s
};

struct TwoQubitConfig {
  double separation = 0.0;                  // m, center to center, coaxial
  std::optional<double> mutual_inductance;  // H; derived from geometry if unset
  bool coupling_enabled = true;
};

struct SimulationConfig {
  std::optional<double> t_final;  // s; three Rabi periods if unset
  double tol = 1e-10;
  EvolutionMode mode = EvolutionMode::kFull;
  int n_max = kDefaultNMax;
  int initial_level = 0;
  int samples = 101;
  double rwa_cutoff = 0.1;
};

struct ConventionsConfig {
  IntensityConvention intensity = IntensityConvention::kPaperConsistent;
  EffectiveRadiusRule effective_radius = EffectiveRadiusRule::Rosa();
};

struct DesignConfig {
  std::string name = "design";
  RingDesign ring;
  Material material;
  BeamConfig beam;
  std::optional<TwoQubitConfig> two_qubit;
  SimulationConfig simulation;
  ConventionsConfig conventions;

  RingParams ring_params() const;
  // omega_{2,0} + detuning.
  double drive_omega(const RingParams& params) const;
  // |A0| from the amplitude or from the intensity under the convention.
  double drive_amplitude(const RingParams& params) const;
  BeamDrive beam_drive(const RingParams& params) const;
  // Throws MissingSection without a two_qubit section.
  TwoRingConfig two_ring_config(const RingParams& params) const;
  // The simulated span: simulation.t_final, else three Rabi periods.
  double evolution_span(const RingParams& params) const;
};

std::string_view to_string(EvolutionMode mode);

// Parses the YAML schema documented in docs/config_schema.md. source names
// the text in error messages.
DesignConfig parse_config(std::string_view text, const std::string& source = "<config>");
DesignConfig load_config(const std::filesystem::path& path);

// Resolved config in the same schema, every quantity in SI at round-trip
// precision; parse_config(emit_config(c)) reproduces c exactly.
std::string emit_config(const DesignConfig& config);

}  // namespace fluxring::workbench

#endif  // FLUXRING_WORKBENCH_CONFIG_H_
