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

// fluxring: command-line workbench for ring flux-qubit designs.
//
//   fluxring --config design.yaml [--format table|json|csv] [--out path] <command>
//
// Exit codes: 0 success, 1 invalid input (config, flags), 2 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fluxring/errors.h"
#include "fluxring/workbench/commands.h"
#include "fluxring/workbench/config.h"
#include "fluxring/workbench/units.h"

namespace {

using namespace fluxring;
using namespace fluxring::workbench;

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

double parse_flag(const std::string& text, Dimension dimension, const std::string& flag) {
  std::string error;
  const auto value = parse_quantity(text, dimension, &error);
  if (!value) throw ValidationError(flag, error);
  return *value;
}

int run(int argc, char** argv) {
  CLI::App app{"Ring flux-qubit design workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format_name = "table";
  std::string out_path;
  std::string emit_path;
  app.add_option("--config", config_path, "design config (YAML)")->required();
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--emit-config", emit_path, "also write the resolved config (SI units) here");

  auto* feasibility = app.add_subcommand("feasibility", "derived quantities and design checks");

  SpectrumOptions spectrum_options;
  auto* spectrum = app.add_subcommand("spectrum", "level energies, currents, transitions");
  spectrum->add_option("--levels", spectrum_options.levels, "rows for |n| <= levels");

  SelectionOptions selection_options;
  auto* selection = app.add_subcommand("selection", "allowed transitions under the beam");
  selection->add_option("--initial", selection_options.initial_level, "initial level");

  RabiOptions rabi_options;
  std::string rabi_min = "0.66 W/m^2";
  std::string rabi_max = "6600 W/m^2";
  auto* rabi = app.add_subcommand("rabi", "Rabi frequency over an intensity sweep");
  rabi->add_option("--min", rabi_min, "lowest intensity, e.g. '1e-4 W/cm^2'");
  rabi->add_option("--max", rabi_max, "highest intensity");
  rabi->add_option("--points", rabi_options.points, "log-spaced sweep points");

  DynamicsOptions dynamics_options;
  std::string t_final;
  std::string mode;
  int samples = 0;
  auto* dynamics = app.add_subcommand("dynamics", "time evolution of level populations");
  dynamics->add_option("--t-final", t_final, "simulated span, e.g. '30 ps'");
  dynamics->add_option("--mode", mode, "full or rwa")->check(CLI::IsMember({"full", "rwa"}));
  dynamics->add_option("--samples", samples, "output samples");

  CzGateOptions cz_options;
  auto* czgate = app.add_subcommand("czgate", "controlled phase and CZ fidelity over time");
  czgate->add_option("--points", cz_options.points, "grid points");
  czgate->add_option("--span", cz_options.span, "grid end in units of t_CZ");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const DesignConfig config = load_config(config_path);
    if (!emit_path.empty()) {
      std::ofstream(emit_path, std::ios::binary) << emit_config(config);
    }
    Report report;
    if (feasibility->parsed()) {
      report = cmd_feasibility(config);
    } else if (spectrum->parsed()) {
      report = cmd_spectrum(config, spectrum_options);
    } else if (selection->parsed()) {
      report = cmd_selection(config, selection_options);
    } else if (rabi->parsed()) {
      rabi_options.intensity_min = parse_flag(rabi_min, Dimension::kIntensity, "--min");
      rabi_options.intensity_max = parse_flag(rabi_max, Dimension::kIntensity, "--max");
      report = cmd_rabi(config, rabi_options);
    } else if (dynamics->parsed()) {
      if (!t_final.empty()) {
        dynamics_options.t_final = parse_flag(t_final, Dimension::kTime, "--t-final");
      }
      if (!mode.empty()) {
        dynamics_options.mode = mode == "full" ? EvolutionMode::kFull : EvolutionMode::kRwa;
      }
      if (samples != 0) dynamics_options.samples = samples;
      report = cmd_dynamics(config, dynamics_options);
    } else {
      report = cmd_czgate(config, cz_options);
    }

    const std::string text = render(report, *parse_output_format(format_name));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << text;
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitValidation;
      }
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnknownKey& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const MissingSection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "error: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
