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

#include "fluxring/workbench/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "fluxring/beam.h"
#include "fluxring/constants.h"
#include "fluxring/coupling.h"
#include "fluxring/errors.h"
#include "fluxring/two_qubit.h"

namespace fluxring::workbench {

namespace {

using constants::kHbar;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Report start(const char* command, const DesignConfig& config) {
  Report report;
  report.command = command;
  report.design = config.name;
  return report;
}

void add(Report& report, std::string key, std::string label, double value, std::string unit) {
  if (!std::isfinite(value)) {
    throw NumericalError("derived quantity '" + key + "' is not finite");
  }
  report.quantities.push_back({std::move(key), std::move(label), value, std::move(unit)});
}

std::string convention_note(const DesignConfig& config) {
  if (config.beam.amplitude) {
    return "beam amplitude |A0| given directly; intensity-equivalent uses the " +
           to_string(config.conventions.intensity) + " convention";
  }
  return "intensity converted with the " + to_string(config.conventions.intensity) +
         " convention: " +
         (config.conventions.intensity == IntensityConvention::kPaperConsistent
              ? "|A0| = sqrt(2 I / (c eps0 omega^2))"
              : "|A0| = sqrt(2 I / (c eps0 omega^2)) / 2");
}

const char* kCyclicNote =
    "GHz values are cyclic frequencies (angular / 2 pi); the angular value is listed alongside";

Check compare(std::string key, std::string description, double value, const char* relation,
              double threshold, bool ok, std::string unit) {
  return {std::move(key), std::move(description), ok ? CheckStatus::kPass : CheckStatus::kFail,
          value, relation, threshold, std::move(unit)};
}

void add_level_table(Report& report, const RingParams& params, int levels) {
  Table table{"levels",
              {{"n", ""}, {"E_n", "J"}, {"I_n", "A"}, {"omega_n0", "rad/s"}},
              {}};
  for (int n = -levels; n <= levels; ++n) {
    table.rows.push_back({static_cast<long long>(n), level_energy(n, params),
                          level_supercurrent(n, params),
                          transition_angular_frequency(n, 0, params)});
  }
  report.tables.push_back(std::move(table));
}

}  // namespace

Report cmd_feasibility(const DesignConfig& config) {
  Report report = start("feasibility", config);
  const RingParams params = config.ring_params();
  const RingDesign& ring = config.ring;
  const Material& material = config.material;

  const double omega20 = transition_angular_frequency(2, 0, params);
  const double wavelength = vacuum_wavelength(omega20);
  add(report, "effective_radius", "effective wire radius a",
      config.conventions.effective_radius.radius_for(ring), "m");
  add(report, "self_inductance", "self inductance L_S", params.self_inductance, "H");
  add(report, "kinetic_inductance", "kinetic inductance L_K", params.kinetic_inductance, "H");
  add(report, "total_inductance", "total inductance L_T", params.total_inductance, "H");
  add(report, "pair_count", "Cooper pairs N*", params.pair_count, "1");
  add(report, "omega_20", "transition 0->2 omega_20", omega20, "rad/s");
  add(report, "frequency_20", "transition 0->2 frequency", omega20 / kTwoPi / 1e12, "THz");
  add(report, "wavelength_20", "resonant vacuum wavelength", wavelength, "m");

  const double omega = config.drive_omega(params);
  const double amplitude = config.drive_amplitude(params);
  add(report, "drive_omega", "drive angular frequency", omega, "rad/s");
  add(report, "a0", "vector potential amplitude |A0|", amplitude, "V*s/m");
  const double intensity =
      config.beam.intensity
          ? *config.beam.intensity
          : amplitude * amplitude / std::pow(amplitude_from_intensity(1.0, omega,
                                                                      config.conventions.intensity),
                                             2);
  add(report, "intensity", "beam intensity", intensity, "W/m^2");
  const double rabi = rabi_frequency(params, amplitude);
  add(report, "rabi_angular", "Rabi frequency Omega", rabi, "rad/s");
  add(report, "rabi_cyclic", "Rabi frequency Omega / 2 pi", rabi / kTwoPi / 1e9, "GHz");
  add(report, "rabi_coupling", "resonant coupling hbar Omega / 2", 0.5 * kHbar * rabi, "J");

  if (config.two_qubit) {
    const TwoRingConfig pair = config.two_ring_config(params);
    add(report, "separation", "ring separation d_R", pair.separation, "m");
    add(report, "mutual_inductance", "mutual inductance M", pair.mutual_inductance, "H");
    add(report, "interaction_energy", "Ising energy H_M(2, 2)",
        interaction_energy(2, 2, pair), "J");
    if (pair.coupling_enabled) add(report, "cz_gate_time", "CZ gate time", cz_gate_time(pair), "s");
  }
  add_level_table(report, params, 4);

  const double lambda_l = material.london_depth;
  report.checks.push_back(compare("thin_wire_width", "thin wire: w/2 below London depth",
                                  ring.width / 2, "<", lambda_l, ring.width / 2 < lambda_l, "m"));
  report.checks.push_back(compare("thin_wire_depth", "thin wire: d/2 below London depth",
                                  ring.depth / 2, "<", lambda_l, ring.depth / 2 < lambda_l, "m"));
  const double skin = material.optical_skin_depth;
  Check penetration{"penetration", "optical penetration: skin depth vs wire depth d",
                    CheckStatus::kFail, skin, ">=", ring.depth, "m"};
  if (skin >= ring.depth) {
    penetration.status = CheckStatus::kPass;
  } else if (skin >= ring.depth / 2) {
    penetration.status = CheckStatus::kMarginal;
  }
  report.checks.push_back(penetration);
  report.checks.push_back(compare("sub_wavelength", "sub-wavelength: d below lambda / 20",
                                  ring.depth, "<", wavelength / 20, ring.depth < wavelength / 20,
                                  "m"));
  if (config.two_qubit) {
    const double limit = 10 * ring.radius;
    report.checks.push_back(compare("dipole_formula", "dipole coupling formula: d_R >= 10 r",
                                    config.two_qubit->separation, ">=", limit,
                                    coaxial_far_field(ring.radius, config.two_qubit->separation),
                                    "m"));
  }

  report.notes.push_back(convention_note(config));
  report.notes.push_back(kCyclicNote);
  report.notes.push_back("Rabi convention pair: Omega = (N* q* / (r m*)) (L_K / L_T) |A0| as an "
                         "angular frequency, quoted in GHz as Omega / 2 pi");
  report.notes.push_back("effective wire radius rule: " +
                         config.conventions.effective_radius.name());
  if (!config.two_qubit) {
    report.notes.push_back("no two_qubit section: mutual inductance and CZ timing skipped");
  } else if (!config.two_qubit->coupling_enabled) {
    report.notes.push_back("inter-ring coupling switched off: no CZ gate time");
  }
  return report;
}

Report cmd_spectrum(const DesignConfig& config, const SpectrumOptions& options) {
  if (options.levels < 0 || options.levels > 1000) {
    throw ValidationError("levels", "must lie in [0, 1000]");
  }
  Report report = start("spectrum", config);
  const RingParams params = config.ring_params();
  add(report, "total_inductance", "total inductance L_T", params.total_inductance, "H");
  add_level_table(report, params, options.levels);
  return report;
}

Report cmd_selection(const DesignConfig& config, const SelectionOptions& options) {
  const int n_max = config.simulation.n_max;
  if (std::abs(options.initial_level) > n_max) {
    throw ValidationError("initial", "initial level lies outside the basis");
  }
  Report report = start("selection", config);
  const RingParams params = config.ring_params();
  const HarmonicDrive drive = azimuthal_component(config.beam_drive(params));
  const auto catalog = resonance_catalog(drive, params, options.initial_level, n_max);
  Table table{"transitions",
              {{"initial", ""},
               {"final", ""},
               {"dn", ""},
               {"order", ""},
               {"photons", ""},
               {"omega", "rad/s"},
               {"wavelength", "m"},
               {"coupling", "J"},
               {"source", ""}},
              {}};
  for (const auto& entry : catalog) {
    table.rows.push_back({static_cast<long long>(entry.initial),
                          static_cast<long long>(entry.final),
                          static_cast<long long>(entry.final - entry.initial),
                          static_cast<long long>(entry.order),
                          static_cast<long long>(entry.photons), entry.required_omega,
                          vacuum_wavelength(entry.required_omega), entry.coupling, entry.source});
  }
  report.tables.push_back(std::move(table));
  report.notes.push_back("polarization " + config.beam.polarization + ", oam " +
                         std::to_string(config.beam.oam_index));
  return report;
}

Report cmd_rabi(const DesignConfig& config, const RabiOptions& options) {
  if (!(options.intensity_min > 0.0) || !(options.intensity_max >= options.intensity_min)) {
    throw ValidationError("intensity", "sweep needs 0 < min <= max");
  }
  if (options.points < 1 || options.points > 100000) {
    throw ValidationError("points", "must lie in [1, 100000]");
  }
  Report report = start("rabi", config);
  const RingParams params = config.ring_params();
  const double omega = config.drive_omega(params);
  add(report, "drive_omega", "drive angular frequency", omega, "rad/s");
  Table table{"sweep",
              {{"intensity", "W/m^2"},
               {"a0", "V*s/m"},
               {"omega_rabi", "rad/s"},
               {"f_rabi", "GHz"},
               {"coupling", "J"}},
              {}};
  const double ratio = options.intensity_max / options.intensity_min;
  for (int k = 0; k < options.points; ++k) {
    const double fraction = options.points == 1 ? 0.0 : double(k) / (options.points - 1);
    const double intensity = options.intensity_min * std::pow(ratio, fraction);
    const double a0 = amplitude_from_intensity(intensity, omega, config.conventions.intensity);
    const double rabi = rabi_frequency(params, a0);
    table.rows.push_back({intensity, a0, rabi, rabi / kTwoPi / 1e9, 0.5 * kHbar * rabi});
  }
  report.tables.push_back(std::move(table));
  report.notes.push_back("intensity converted with the " +
                         to_string(config.conventions.intensity) + " convention");
  report.notes.push_back(kCyclicNote);
  return report;
}

Report cmd_dynamics(const DesignConfig& config, const DynamicsOptions& options) {
  Report report = start("dynamics", config);
  const RingParams params = config.ring_params();
  const BeamDrive beam = config.beam_drive(params);
  const SimulationConfig& sim = config.simulation;
  const double span = options.t_final ? *options.t_final : config.evolution_span(params);
  const EvolutionMode mode = options.mode.value_or(sim.mode);
  EvolveOptions evolve_options;
  evolve_options.rwa_cutoff = sim.rwa_cutoff;
  evolve_options.samples = static_cast<std::size_t>(options.samples.value_or(sim.samples));
  if (evolve_options.samples < 2) throw ValidationError("samples", "need at least 2");

  const Trajectory trajectory =
      evolve(StateVector::basis_state(sim.n_max, sim.initial_level), beam, params, span, sim.tol,
             mode, evolve_options);

  const double rabi = rabi_frequency(params, std::abs(beam.a0));
  add(report, "t_final", "simulated span", span, "s");
  add(report, "rabi_angular", "Rabi frequency Omega", rabi, "rad/s");
  add(report, "rabi_cyclic", "Rabi frequency Omega / 2 pi", rabi / kTwoPi / 1e9, "GHz");
  add(report, "max_norm_drift", "max norm drift", trajectory.max_norm_drift(), "1");
  add(report, "accepted_steps", "accepted integrator steps",
      static_cast<double>(trajectory.stats.accepted_steps), "1");

  const int shown = std::min(sim.n_max, 4);
  Table table{"trajectory", {{"t", "s"}}, {}};
  for (int n = -shown; n <= shown; ++n) table.columns.push_back({"P(" + std::to_string(n) + ")", "1"});
  table.columns.push_back({"dipole", "C*m"});
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    std::vector<Cell> row{trajectory.times[k]};
    for (int n = -shown; n <= shown; ++n) row.push_back(trajectory.population(k, n));
    const auto p = dipole_moment(trajectory.states[k], params, trajectory.times[k]);
    row.push_back(std::hypot(p[0], p[1]));
    table.rows.push_back(std::move(row));
  }
  report.tables.push_back(std::move(table));
  report.notes.push_back(std::string("mode ") + std::string(to_string(mode)) + ", tol " +
                         format_number(sim.tol) + ", n_max " + std::to_string(sim.n_max) +
                         ", initial level " + std::to_string(sim.initial_level));
  report.notes.push_back(kCyclicNote);
  return report;
}

Report cmd_czgate(const DesignConfig& config, const CzGateOptions& options) {
  if (options.points < 2 || options.points > 100000) {
    throw ValidationError("points", "must lie in [2, 100000]");
  }
  if (!(options.span > 0.0)) throw ValidationError("span", "must be positive");
  Report report = start("czgate", config);
  const RingParams params = config.ring_params();
  const TwoRingConfig pair = config.two_ring_config(params);
  const double t_cz = cz_gate_time(pair);
  add(report, "mutual_inductance", "mutual inductance M", pair.mutual_inductance, "H");
  add(report, "interaction_energy", "Ising energy H_M(2, 2)", interaction_energy(2, 2, pair),
      "J");
  add(report, "cz_gate_time", "CZ gate time", t_cz, "s");
  add(report, "cz_infidelity", "1 - CZ fidelity at t_CZ", 1.0 - cz_fidelity(pair, t_cz), "1");

  Table table{"gate", {{"t", "s"}, {"phi_cp", "rad"}, {"fidelity", "1"}}, {}};
  for (int k = 0; k < options.points; ++k) {
    const double t = t_cz * (options.span * k / (options.points - 1));
    table.rows.push_back({t, controlled_phase(t, pair), cz_fidelity(pair, t)});
  }
  report.tables.push_back(std::move(table));
  report.notes.push_back("fidelity is the process fidelity |Tr(CZ^dag U)|^2 / 16 after "
                         "removing single-ring phases");
  return report;
}

}  // namespace fluxring::workbench
