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

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <vector>

#include "fluxring/coupling.h"
#include "fluxring/errors.h"
#include "fluxring/workbench/units.h"

namespace fluxring::workbench {

namespace {

std::string location(const std::string& source, int line, int column) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column);
}

std::string round_trip(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// One mapping of the config, with its allowed keys.
class Section {
 public:
  Section(const YAML::Node& node, std::string path, const std::string& source,
          std::initializer_list<std::string_view> allowed)
      : node_(node), path_(std::move(path)), source_(source) {
    if (!node_.IsMap()) {
      throw ParseError(source_, node_.Mark().line + 1, node_.Mark().column + 1,
                       "'" + path_ + "' must be a mapping");
    }
    std::vector<std::string> seen;
    for (const auto& entry : node_) {
      const auto key = entry.first.as<std::string>();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
        throw ParseError(source_, entry.first.Mark().line + 1, entry.first.Mark().column + 1,
                         "duplicate key '" + key + "'");
      }
      seen.push_back(key);
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw UnknownKey(source_, path_.empty() ? key : path_ + "." + key,
                         entry.first.Mark().line + 1, entry.first.Mark().column + 1);
      }
    }
  }

  bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  YAML::Node child(const std::string& key) const { return node_[key]; }

  std::optional<double> quantity(const std::string& key, Dimension dimension) const {
    const YAML::Node value = node_[key];
    if (!value) return std::nullopt;
    std::string error;
    const auto parsed = value.IsScalar()
                            ? parse_quantity(value.Scalar(), dimension, &error)
                            : std::optional<double>{};
    if (!parsed) {
      if (error.empty()) error = "expected a scalar quantity";
      fail(key, value, error);
    }
    return parsed;
  }

  double required(const std::string& key, Dimension dimension) const {
    const auto value = quantity(key, dimension);
    if (!value) {
      throw ValidationError(key, "'" + qualified(key) + "' is required (" + where_self() + ")");
    }
    return *value;
  }

  double positive(const std::string& key, Dimension dimension) const {
    const double value = required(key, dimension);
    if (!(value > 0.0)) fail(key, node_[key], "must be positive");
    return value;
  }

  std::optional<long long> integer(const std::string& key) const {
    const YAML::Node value = node_[key];
    if (!value) return std::nullopt;
    long long out = 0;
    if (!value.IsScalar() || !YAML::convert<long long>::decode(value, out)) {
      fail(key, value, "expected an integer");
    }
    return out;
  }

  std::optional<std::string> text(const std::string& key) const {
    const YAML::Node value = node_[key];
    if (!value) return std::nullopt;
    if (!value.IsScalar()) fail(key, value, "expected a string");
    return value.Scalar();
  }

  std::optional<bool> boolean(const std::string& key) const {
    const YAML::Node value = node_[key];
    if (!value) return std::nullopt;
    bool out = false;
    if (!value.IsScalar() || !YAML::convert<bool>::decode(value, out)) {
      fail(key, value, "expected a boolean");
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& key, const YAML::Node& at,
                         const std::string& reason) const {
    throw ValidationError(key, "'" + qualified(key) + "' " + reason + " (" + where(at) + ")");
  }

  [[noreturn]] void unknown(const std::string& key, const YAML::Node& at) const {
    throw UnknownKey(source_, key, at.Mark().line + 1, at.Mark().column + 1);
  }

  std::string where_self() const { return where(node_); }

  std::string where(const YAML::Node& at) const {
    return location(source_, at.Mark().line + 1, at.Mark().column + 1);
  }

 private:
  std::string qualified(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  YAML::Node node_;
  std::string path_;
  const std::string& source_;
};

std::complex<double> parse_complex(const Section& section, const YAML::Node& jones,
                                   const std::string& key) {
  const YAML::Node value = jones[key];
  if (!value) section.fail("jones", jones, "needs components x and y");
  if (value.IsScalar()) {
    double re = 0.0;
    if (!YAML::convert<double>::decode(value, re)) section.fail("jones", value, "bad component");
    return {re, 0.0};
  }
  double re = 0.0, im = 0.0;
  if (!value.IsSequence() || value.size() != 2 || !YAML::convert<double>::decode(value[0], re) ||
      !YAML::convert<double>::decode(value[1], im)) {
    section.fail("jones", value, "component must be a number or [re, im]");
  }
  return {re, im};
}

Polarization polarization_of(const BeamConfig& beam) {
  if (beam.polarization == "linear-x") return Polarization::LinearX();
  if (beam.polarization == "linear-y") return Polarization::LinearY();
  if (beam.polarization == "right-circular") return Polarization::RightCircular();
  if (beam.polarization == "left-circular") return Polarization::LeftCircular();
  return Polarization::FromJones(beam.jones_x, beam.jones_y);
}

void parse_ring(const Section& s, DesignConfig& config) {
  config.ring.radius = s.positive("radius", Dimension::kLength);
  config.ring.width = s.positive("width", Dimension::kLength);
  config.ring.depth = s.positive("depth", Dimension::kLength);
}

void parse_material(const Section& s, DesignConfig& config) {
  config.material.pair_density = s.positive("pair_density", Dimension::kDensity);
  config.material.london_depth = s.positive("london_depth", Dimension::kLength);
  config.material.optical_skin_depth = s.positive("skin_depth", Dimension::kLength);
}

void parse_beam(const Section& s, DesignConfig& config) {
  BeamConfig& beam = config.beam;
  if (const auto l = s.integer("oam")) {
    if (std::abs(*l) > 1000) s.fail("oam", s.child("oam"), "is out of range");
    beam.oam_index = static_cast<int>(*l);
  }
  if (const auto p = s.text("polarization")) {
    static constexpr std::string_view kNames[] = {"linear-x", "linear-y", "right-circular",
                                                  "left-circular", "jones"};
    if (std::find(std::begin(kNames), std::end(kNames), *p) == std::end(kNames)) {
      s.fail("polarization", s.child("polarization"),
             "must be linear-x, linear-y, right-circular, left-circular or jones");
    }
    beam.polarization = *p;
  }
  if (beam.polarization == "jones") {
    const YAML::Node jones = s.child("jones");
    if (!jones || !jones.IsMap()) {
      s.fail("jones", jones ? jones : s.child("polarization"),
             "must map x and y to components when polarization is jones");
    }
    for (const auto& entry : jones) {
      const auto key = entry.first.as<std::string>();
      if (key != "x" && key != "y") {
        s.unknown("beam.jones." + key, entry.first);
      }
    }
    beam.jones_x = parse_complex(s, jones, "x");
    beam.jones_y = parse_complex(s, jones, "y");
  } else if (s.has("jones")) {
    s.fail("jones", s.child("jones"), "is only allowed with polarization: jones");
  }
  beam.amplitude = s.quantity("a0", Dimension::kVectorPotential);
  beam.intensity = s.quantity("intensity", Dimension::kIntensity);
  if (beam.amplitude.has_value() == beam.intensity.has_value()) {
    throw ValidationError("a0", "beam needs exactly one of 'a0' and 'intensity' (" +
                                    s.where_self() + ")");
  }
  if (beam.amplitude && !(*beam.amplitude >= 0.0)) {
    s.fail("a0", s.child("a0"), "must be non-negative");
  }
  if (beam.intensity && !(*beam.intensity >= 0.0)) {
    s.fail("intensity", s.child("intensity"), "must be non-negative");
  }
  beam.phase = s.quantity("phase", Dimension::kAngle).value_or(0.0);
  beam.detuning = s.quantity("detuning", Dimension::kAngularFrequency).value_or(0.0);
  try {
    (void)polarization_of(beam);
  } catch (const ValidationError&) {
    s.fail("jones", s.child("jones"), "must have unit norm");
  }
}

void parse_two_qubit(const Section& s, DesignConfig& config) {
  TwoQubitConfig two;
  two.separation = s.positive("separation", Dimension::kLength);
  if (s.has("mutual_inductance")) {
    two.mutual_inductance = s.positive("mutual_inductance", Dimension::kInductance);
  }
  two.coupling_enabled = s.boolean("coupling").value_or(true);
  config.two_qubit = two;
  config.ring.ring_separation = two.separation;
}

void parse_simulation(const Section& s, DesignConfig& config) {
  SimulationConfig& sim = config.simulation;
  if (s.has("t_final")) sim.t_final = s.positive("t_final", Dimension::kTime);
  if (const auto tol = s.quantity("tol", Dimension::kDimensionless)) {
    if (!(*tol >= 1e-13 && *tol <= 1e-6)) s.fail("tol", s.child("tol"), "must lie in [1e-13, 1e-6]");
    sim.tol = *tol;
  }
  if (const auto mode = s.text("mode")) {
    if (*mode == "full") {
      sim.mode = EvolutionMode::kFull;
    } else if (*mode == "rwa") {
      sim.mode = EvolutionMode::kRwa;
    } else {
      s.fail("mode", s.child("mode"), "must be full or rwa");
    }
  }
  if (const auto n_max = s.integer("n_max")) {
    if (*n_max < 2 || *n_max > 64) s.fail("n_max", s.child("n_max"), "must lie in [2, 64]");
    sim.n_max = static_cast<int>(*n_max);
  }
  if (const auto initial = s.integer("initial_level")) {
    if (std::abs(*initial) > sim.n_max) {
      s.fail("initial_level", s.child("initial_level"), "lies outside the basis");
    }
    sim.initial_level = static_cast<int>(*initial);
  }
  if (const auto samples = s.integer("samples")) {
    if (*samples < 2 || *samples > 1000000) {
      s.fail("samples", s.child("samples"), "must lie in [2, 1000000]");
    }
    sim.samples = static_cast<int>(*samples);
  }
  if (const auto cutoff = s.quantity("rwa_cutoff", Dimension::kDimensionless)) {
    if (!(*cutoff > 0.0)) s.fail("rwa_cutoff", s.child("rwa_cutoff"), "must be positive");
    sim.rwa_cutoff = *cutoff;
  }
}

void parse_conventions(const Section& s, DesignConfig& config) {
  ConventionsConfig& conv = config.conventions;
  if (const auto intensity = s.text("intensity")) {
    if (*intensity == "paper-consistent") {
      conv.intensity = IntensityConvention::kPaperConsistent;
    } else if (*intensity == "peak-field") {
      conv.intensity = IntensityConvention::kPeakField;
    } else {
      s.fail("intensity", s.child("intensity"), "must be paper-consistent or peak-field");
    }
  }
  const auto rule = s.text("effective_radius").value_or("rosa");
  if (rule == "rosa") {
    conv.effective_radius = EffectiveRadiusRule::Rosa();
  } else if (rule == "half-mean") {
    conv.effective_radius = EffectiveRadiusRule::HalfMean();
  } else if (rule == "explicit") {
    conv.effective_radius = EffectiveRadiusRule::Explicit(
        s.positive("effective_radius_value", Dimension::kLength));
  } else {
    s.fail("effective_radius", s.child("effective_radius"),
           "must be rosa, half-mean or explicit");
  }
  if (rule != "explicit" && s.has("effective_radius_value")) {
    s.fail("effective_radius_value", s.child("effective_radius_value"),
           "is only allowed with effective_radius: explicit");
  }
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, int column, const std::string& reason)
    : std::runtime_error(location(source, line, column) + ": parse error: " + reason),
      line_(line),
      column_(column) {}

UnknownKey::UnknownKey(const std::string& source, const std::string& key, int line, int column)
    : std::runtime_error(location(source, line, column) + ": unknown key '" + key + "'"),
      key_(key),
      line_(line),
      column_(column) {}

MissingSection::MissingSection(const std::string& section)
    : std::runtime_error("config has no '" + section + "' section"), section_(section) {}

std::string_view to_string(EvolutionMode mode) {
  return mode == EvolutionMode::kFull ? "full" : "rwa";
}

RingParams DesignConfig::ring_params() const {
  return derive_ring_params(ring, material, conventions.effective_radius);
}

double DesignConfig::drive_omega(const RingParams& params) const {
  const double omega = transition_angular_frequency(2, 0, params) + beam.detuning;
  if (!(omega > 0.0)) throw ValidationError("detuning", "drive frequency must stay positive");
  return omega;
}

double DesignConfig::drive_amplitude(const RingParams& params) const {
  if (beam.amplitude) return *beam.amplitude;
  return amplitude_from_intensity(*beam.intensity, drive_omega(params), conventions.intensity);
}

BeamDrive DesignConfig::beam_drive(const RingParams& params) const {
  BeamDrive drive;
  drive.oam_index = beam.oam_index;
  drive.omega = drive_omega(params);
  drive.a0 = std::polar(drive_amplitude(params), beam.phase);
  drive.polarization = polarization_of(beam);
  drive.validate();
  return drive;
}

TwoRingConfig DesignConfig::two_ring_config(const RingParams& params) const {
  if (!two_qubit) throw MissingSection("two_qubit");
  TwoRingConfig pair =
      two_qubit->mutual_inductance
          ? TwoRingConfig::Explicit(params, params, two_qubit->separation,
                                    *two_qubit->mutual_inductance)
          : TwoRingConfig::Coaxial(params, params, two_qubit->separation);
  pair.coupling_enabled = two_qubit->coupling_enabled;
  return pair;
}

double DesignConfig::evolution_span(const RingParams& params) const {
  if (simulation.t_final) return *simulation.t_final;
  const double rabi = rabi_frequency(params, drive_amplitude(params));
  if (!(rabi > 0.0)) {
    throw ValidationError("t_final", "simulation.t_final is required when the drive is off");
  }
  return 3.0 * 2.0 * std::acos(-1.0) / rabi;
}

DesignConfig parse_config(std::string_view text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(source, e.mark.line + 1, e.mark.column + 1, e.msg);
  }
  if (!root.IsMap()) throw ParseError(source, 1, 1, "top level must be a mapping");

  DesignConfig config;
  const Section top(root, "", source,
                    {"name", "ring", "material", "beam", "two_qubit", "simulation", "conventions"});
  if (const auto name = top.text("name")) config.name = *name;
  for (const char* required : {"ring", "material", "beam"}) {
    if (!top.has(required)) {
      throw ValidationError(required, std::string("section '") + required + "' is required (" +
                                          source + ")");
    }
  }
  parse_ring(Section(root["ring"], "ring", source, {"radius", "width", "depth"}), config);
  parse_material(Section(root["material"], "material", source,
                         {"pair_density", "london_depth", "skin_depth"}),
                 config);
  if (top.has("conventions")) {
    parse_conventions(Section(root["conventions"], "conventions", source,
                              {"intensity", "effective_radius", "effective_radius_value"}),
                      config);
  }
  parse_beam(Section(root["beam"], "beam", source,
                     {"oam", "polarization", "jones", "a0", "intensity", "phase", "detuning"}),
             config);
  if (top.has("two_qubit")) {
    parse_two_qubit(Section(root["two_qubit"], "two_qubit", source,
                            {"separation", "mutual_inductance", "coupling"}),
                    config);
  }
  if (top.has("simulation")) {
    parse_simulation(Section(root["simulation"], "simulation", source,
                             {"t_final", "tol", "mode", "n_max", "initial_level", "samples",
                              "rwa_cutoff"}),
                     config);
  }
  config.ring.validate();
  config.material.validate();
  return config;
}

DesignConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("config", "cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  DesignConfig config = parse_config(text.str(), path.string());
  return config;
}

std::string emit_config(const DesignConfig& config) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << config.name;

  out << YAML::Key << "ring" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "radius" << YAML::Value << round_trip(config.ring.radius);
  out << YAML::Key << "width" << YAML::Value << round_trip(config.ring.width);
  out << YAML::Key << "depth" << YAML::Value << round_trip(config.ring.depth);
  out << YAML::EndMap;

  out << YAML::Key << "material" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "pair_density" << YAML::Value << round_trip(config.material.pair_density);
  out << YAML::Key << "london_depth" << YAML::Value << round_trip(config.material.london_depth);
  out << YAML::Key << "skin_depth" << YAML::Value
      << round_trip(config.material.optical_skin_depth);
  out << YAML::EndMap;

  const BeamConfig& beam = config.beam;
  out << YAML::Key << "beam" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "oam" << YAML::Value << beam.oam_index;
  out << YAML::Key << "polarization" << YAML::Value << beam.polarization;
  if (beam.polarization == "jones") {
    out << YAML::Key << "jones" << YAML::Value << YAML::BeginMap;
    for (const auto& [key, c] : {std::pair{"x", beam.jones_x}, std::pair{"y", beam.jones_y}}) {
      out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq
          << round_trip(c.real()) << round_trip(c.imag()) << YAML::EndSeq;
    }
    out << YAML::EndMap;
  }
  if (beam.amplitude) out << YAML::Key << "a0" << YAML::Value << round_trip(*beam.amplitude);
  if (beam.intensity) {
    out << YAML::Key << "intensity" << YAML::Value << round_trip(*beam.intensity);
  }
  out << YAML::Key << "phase" << YAML::Value << round_trip(beam.phase);
  out << YAML::Key << "detuning" << YAML::Value << round_trip(beam.detuning);
  out << YAML::EndMap;

  if (config.two_qubit) {
    const TwoQubitConfig& two = *config.two_qubit;
    out << YAML::Key << "two_qubit" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "separation" << YAML::Value << round_trip(two.separation);
    if (two.mutual_inductance) {
      out << YAML::Key << "mutual_inductance" << YAML::Value
          << round_trip(*two.mutual_inductance);
    }
    out << YAML::Key << "coupling" << YAML::Value << two.coupling_enabled;
    out << YAML::EndMap;
  }

  const SimulationConfig& sim = config.simulation;
  out << YAML::Key << "simulation" << YAML::Value << YAML::BeginMap;
  if (sim.t_final) out << YAML::Key << "t_final" << YAML::Value << round_trip(*sim.t_final);
  out << YAML::Key << "tol" << YAML::Value << round_trip(sim.tol);
  out << YAML::Key << "mode" << YAML::Value << std::string(to_string(sim.mode));
  out << YAML::Key << "n_max" << YAML::Value << sim.n_max;
  out << YAML::Key << "initial_level" << YAML::Value << sim.initial_level;
  out << YAML::Key << "samples" << YAML::Value << sim.samples;
  out << YAML::Key << "rwa_cutoff" << YAML::Value << round_trip(sim.rwa_cutoff);
  out << YAML::EndMap;

  const ConventionsConfig& conv = config.conventions;
  out << YAML::Key << "conventions" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "intensity" << YAML::Value << std::string(to_string(conv.intensity));
  out << YAML::Key << "effective_radius" << YAML::Value << conv.effective_radius.name();
  if (conv.effective_radius.kind() == EffectiveRadiusRule::Kind::kExplicit) {
    out << YAML::Key << "effective_radius_value" << YAML::Value
        << round_trip(conv.effective_radius.radius_for(config.ring));
  }
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace fluxring::workbench
