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

#include "fluxring/workbench/config.h"

#include <cmath>
#include <string>

#include "fluxring/errors.h"
#include "fluxring/workbench/commands.h"
#include "fluxring/workbench/units.h"
#include "gtest/gtest.h"

namespace fluxring::workbench {
namespace {

const std::string kPaperDesign = FLUXRING_SOURCE_DIR "/tools/configs/paper-design.yaml";

constexpr const char* kMinimal = R"(ring:
  radius: 2 um
  width: 60 nm
  depth: 10 nm
material:
  pair_density: 2.1e28
  london_depth: 50 nm
  skin_depth: 7 nm
beam:
  a0: 8.6e-14
)";

std::string with(const std::string& extra) { return std::string(kMinimal) + extra; }

TEST(parse_quantity, units_convert_to_si) {
  std::string error;
  EXPECT_EQ(parse_quantity("2 um", Dimension::kLength, &error), 2e-6);
  EXPECT_EQ(parse_quantity("2um", Dimension::kLength, &error), 2e-6);
  EXPECT_EQ(parse_quantity("60 nm", Dimension::kLength, &error), 60e-9);
  EXPECT_EQ(parse_quantity("0.1 mm", Dimension::kLength, &error), 0.1e-3);
  EXPECT_EQ(parse_quantity("2.1e22 cm^-3", Dimension::kDensity, &error), 2.1e28);
  EXPECT_EQ(parse_quantity("6.6e-3 W/cm^2", Dimension::kIntensity, &error), 66.0);
  EXPECT_EQ(parse_quantity("30 ps", Dimension::kTime, &error), 30e-12);
  EXPECT_DOUBLE_EQ(*parse_quantity("180 deg", Dimension::kAngle, &error), std::acos(-1.0));
  EXPECT_EQ(parse_quantity("3.2e-5 pH", Dimension::kInductance, &error), 3.2e-17);
  EXPECT_EQ(parse_quantity(" -1.5 ", Dimension::kLength, &error), -1.5);
  EXPECT_EQ(parse_quantity("+4", Dimension::kDimensionless, &error), 4.0);
  EXPECT_TRUE(error.empty());
}

TEST(parse_quantity, rejects_malformed_text) {
  std::string error;
  EXPECT_FALSE(parse_quantity("2 ps", Dimension::kLength, &error));
  EXPECT_NE(error.find("'ps'"), std::string::npos);
  EXPECT_FALSE(parse_quantity("um", Dimension::kLength, &error));
  EXPECT_FALSE(parse_quantity("", Dimension::kLength, &error));
  EXPECT_FALSE(parse_quantity("1e999 m", Dimension::kLength, &error));
  EXPECT_FALSE(parse_quantity("nan", Dimension::kLength, &error));
  EXPECT_FALSE(parse_quantity("3 nm", Dimension::kDimensionless, &error));
  EXPECT_FALSE(parse_quantity("1e305 cm^-3", Dimension::kDensity, &error));
}

TEST(load_config, bundled_paper_design) {
  const DesignConfig config = load_config(kPaperDesign);
  EXPECT_EQ(config.name, "paper-design");
  EXPECT_EQ(config.ring.radius, 2e-6);
  EXPECT_EQ(config.ring.width, 60e-9);
  EXPECT_EQ(config.ring.depth, 10e-9);
  EXPECT_EQ(config.material.pair_density, 2.1e28);
  EXPECT_EQ(config.material.london_depth, 50e-9);
  EXPECT_EQ(config.material.optical_skin_depth, 7e-9);
  EXPECT_EQ(config.beam.oam_index, 1);
  EXPECT_EQ(config.beam.polarization, "linear-x");
  EXPECT_EQ(config.beam.amplitude, 8.6e-14);
  EXPECT_FALSE(config.beam.intensity.has_value());
  ASSERT_TRUE(config.two_qubit.has_value());
  EXPECT_EQ(config.two_qubit->separation, 1e-4);
  EXPECT_TRUE(config.two_qubit->coupling_enabled);
  EXPECT_EQ(config.ring.ring_separation, 1e-4);
  EXPECT_EQ(config.simulation.mode, EvolutionMode::kFull);
  EXPECT_EQ(config.simulation.n_max, 8);
  EXPECT_EQ(config.conventions.intensity, IntensityConvention::kPaperConsistent);
  EXPECT_EQ(config.conventions.effective_radius.kind(), EffectiveRadiusRule::Kind::kRosa);
}

TEST(load_config, missing_file) {
  EXPECT_THROW(load_config("/nonexistent/design.yaml"), ValidationError);
}

TEST(parse_config, defaults) {
  const DesignConfig config = parse_config(kMinimal);
  EXPECT_EQ(config.name, "design");
  EXPECT_EQ(config.beam.oam_index, 1);
  EXPECT_EQ(config.beam.phase, 0.0);
  EXPECT_EQ(config.beam.detuning, 0.0);
  EXPECT_FALSE(config.two_qubit.has_value());
  EXPECT_EQ(config.simulation.tol, 1e-10);
  EXPECT_FALSE(config.simulation.t_final.has_value());
  EXPECT_EQ(config.simulation.rwa_cutoff, 0.1);
}

TEST(parse_config, negative_width_names_the_field) {
  std::string text = kMinimal;
  text.replace(text.find("60 nm"), 5, "-1 nm");
  try {
    parse_config(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "width");
    EXPECT_NE(std::string(e.what()).find("ring.width"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST(parse_config, core_invariants_apply) {
  std::string text = kMinimal;
  text.replace(text.find("60 nm"), 5, "300 nm");
  try {
    parse_config(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "width");
  }
}

TEST(parse_config, unknown_key_reports_position) {
  try {
    parse_config(with("  colour: blue\n"), "d.yaml");
    FAIL() << "expected UnknownKey";
  } catch (const UnknownKey& e) {
    EXPECT_EQ(e.key(), "beam.colour");
    EXPECT_EQ(e.line(), 11);
    EXPECT_EQ(e.column(), 3);
    EXPECT_NE(std::string(e.what()).find("d.yaml:11:3"), std::string::npos);
  }
  EXPECT_THROW(parse_config(with("extras: 1\n")), UnknownKey);
}

TEST(parse_config, syntax_error_reports_position) {
  try {
    parse_config(with("simulation: [1, 2\n"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 12);
    EXPECT_GE(e.column(), 1);
  }
  EXPECT_THROW(parse_config("- just\n- a list\n"), ParseError);
  EXPECT_THROW(parse_config(with("ring: 3\n")), ParseError);  // duplicate key
}

TEST(parse_config, required_sections_and_values) {
  EXPECT_THROW(parse_config("ring: {radius: 1}\n"), ValidationError);
  std::string no_depth = kMinimal;
  no_depth.erase(no_depth.find("  depth: 10 nm\n"), 15);
  try {
    parse_config(no_depth);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "depth");
  }
}

TEST(parse_config, beam_amplitude_xor_intensity) {
  EXPECT_THROW(parse_config(with("  intensity: 66\n")), ValidationError);
  std::string no_amplitude = kMinimal;
  no_amplitude.replace(no_amplitude.find("a0: 8.6e-14"), 11, "oam: 1");
  EXPECT_THROW(parse_config(no_amplitude), ValidationError);
  no_amplitude.replace(no_amplitude.find("oam: 1"), 6, "intensity: 6.6e-3 W/cm^2");
  const DesignConfig config = parse_config(no_amplitude);
  EXPECT_EQ(config.beam.intensity, 66.0);
  const RingParams params = config.ring_params();
  EXPECT_EQ(config.drive_amplitude(params),
            amplitude_from_intensity(66.0, transition_angular_frequency(2, 0, params),
                                     IntensityConvention::kPaperConsistent));
}

TEST(parse_config, polarization_choices) {
  EXPECT_EQ(parse_config(with("  polarization: right-circular\n")).beam.polarization,
            "right-circular");
  EXPECT_THROW(parse_config(with("  polarization: diagonal\n")), ValidationError);
  const DesignConfig jones =
      parse_config(with("  polarization: jones\n  jones: {x: 0.6, y: [0, 0.8]}\n"));
  const BeamDrive drive = jones.beam_drive(jones.ring_params());
  EXPECT_EQ(drive.polarization.ex(), std::complex<double>(0.6, 0.0));
  EXPECT_EQ(drive.polarization.ey(), std::complex<double>(0.0, 0.8));
  EXPECT_THROW(parse_config(with("  polarization: jones\n  jones: {x: 1, y: 1}\n")),
               ValidationError);
  EXPECT_THROW(parse_config(with("  polarization: jones\n  jones: {x: 1, z: 0}\n")), UnknownKey);
  EXPECT_THROW(parse_config(with("  jones: {x: 1, y: 0}\n")), ValidationError);
}

TEST(parse_config, simulation_and_conventions) {
  const DesignConfig config = parse_config(with(R"(simulation:
  t_final: 30 ps
  tol: 1e-9
  mode: rwa
  n_max: 4
  initial_level: -2
  samples: 11
  rwa_cutoff: 0.05
conventions:
  intensity: peak-field
  effective_radius: explicit
  effective_radius_value: 13.83 nm
)"));
  EXPECT_EQ(config.simulation.t_final, 30e-12);
  EXPECT_EQ(config.simulation.tol, 1e-9);
  EXPECT_EQ(config.simulation.mode, EvolutionMode::kRwa);
  EXPECT_EQ(config.simulation.n_max, 4);
  EXPECT_EQ(config.simulation.initial_level, -2);
  EXPECT_EQ(config.simulation.samples, 11);
  EXPECT_EQ(config.simulation.rwa_cutoff, 0.05);
  EXPECT_EQ(config.conventions.intensity, IntensityConvention::kPeakField);
  EXPECT_EQ(config.conventions.effective_radius.radius_for(config.ring), 13.83e-9);

  EXPECT_THROW(parse_config(with("simulation: {tol: 1e-3}\n")), ValidationError);
  EXPECT_THROW(parse_config(with("simulation: {mode: exact}\n")), ValidationError);
  EXPECT_THROW(parse_config(with("simulation: {n_max: 1.5}\n")), ValidationError);
  EXPECT_THROW(parse_config(with("simulation: {n_max: 4, initial_level: 5}\n")),
               ValidationError);
  EXPECT_THROW(parse_config(with("conventions: {effective_radius: explicit}\n")),
               ValidationError);
  EXPECT_THROW(parse_config(with("conventions: {effective_radius_value: 1 nm}\n")),
               ValidationError);
}

TEST(parse_config, two_qubit_section_is_optional) {
  const DesignConfig config = parse_config(kMinimal);
  const RingParams params = config.ring_params();
  EXPECT_THROW(config.two_ring_config(params), MissingSection);
  EXPECT_THROW(cmd_czgate(config), MissingSection);
  EXPECT_NO_THROW(cmd_feasibility(config));

  const DesignConfig pair = parse_config(
      with("two_qubit:\n  separation: 0.1 mm\n  mutual_inductance: 3.2e-5 pH\n  coupling: off\n"));
  const TwoRingConfig two = pair.two_ring_config(pair.ring_params());
  EXPECT_EQ(two.mutual_inductance, 3.2e-17);
  EXPECT_FALSE(two.coupling_enabled);
  EXPECT_THROW(parse_config(with("two_qubit: {separation: 0}\n")), ValidationError);
  EXPECT_THROW(parse_config(with("two_qubit: {separation: 1 mm, coupling: maybe}\n")),
               ValidationError);
}

TEST(parse_config, drive_frequency_follows_detuning) {
  const DesignConfig config = parse_config(with("  detuning: -1e12 rad/s\n  phase: 90 deg\n"));
  const RingParams params = config.ring_params();
  const BeamDrive drive = config.beam_drive(params);
  EXPECT_EQ(drive.omega, transition_angular_frequency(2, 0, params) - 1e12);
  EXPECT_NEAR(drive.a0.real(), 0.0, 1e-28);
  EXPECT_NEAR(drive.a0.imag(), 8.6e-14, 1e-28);
  const DesignConfig bad = parse_config(with("  detuning: -1e16\n"));
  EXPECT_THROW(bad.beam_drive(bad.ring_params()), ValidationError);
}

TEST(emit_config, round_trip_is_exact) {
  for (const std::string& text :
       {std::string(kMinimal),
        with("  polarization: jones\n  jones: {x: [0.6, 0.1], y: [0, 0.7937253933193772]}\n"
             "  detuning: 1.234567e11\n"
             "two_qubit: {separation: 0.3 mm, coupling: false}\n"
             "simulation: {t_final: 7 ps, mode: rwa, tol: 3e-11}\n"
             "conventions: {intensity: peak-field, effective_radius: explicit,"
             " effective_radius_value: 0.1 um}\n")}) {
    const DesignConfig first = parse_config(text);
    const std::string emitted = emit_config(first);
    const DesignConfig second = parse_config(emitted);
    EXPECT_EQ(emit_config(second), emitted);
    EXPECT_EQ(render(cmd_feasibility(second), OutputFormat::kJson),
              render(cmd_feasibility(first), OutputFormat::kJson));
  }
}

TEST(emit_config, bundled_design_reports_survive_round_trip) {
  const DesignConfig original = load_config(kPaperDesign);
  const DesignConfig reloaded = parse_config(emit_config(original));
  CzGateOptions cz;
  cz.points = 5;
  EXPECT_EQ(render(cmd_feasibility(reloaded), OutputFormat::kJson),
            render(cmd_feasibility(original), OutputFormat::kJson));
  EXPECT_EQ(render(cmd_spectrum(reloaded), OutputFormat::kJson),
            render(cmd_spectrum(original), OutputFormat::kJson));
  EXPECT_EQ(render(cmd_selection(reloaded), OutputFormat::kJson),
            render(cmd_selection(original), OutputFormat::kJson));
  EXPECT_EQ(render(cmd_rabi(reloaded), OutputFormat::kJson),
            render(cmd_rabi(original), OutputFormat::kJson));
  EXPECT_EQ(render(cmd_czgate(reloaded, cz), OutputFormat::kJson),
            render(cmd_czgate(original, cz), OutputFormat::kJson));
}

}  // namespace
}  // namespace fluxring::workbench
