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

#include "fluxring/ring.h"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "fluxring/constants.h"
#include "fluxring/errors.h"

namespace fluxring {

using constants::kPi;

namespace {

void require_positive(const char* field, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(field, "must be a positive finite value");
  }
}

}  // namespace

void RingDesign::validate() const {
  require_positive("radius", radius);
  require_positive("width", width);
  require_positive("depth", depth);
  if (!(width < radius / 10.0)) {
    throw ValidationError("width", "thin-wire model requires width < radius / 10");
  }
  if (ring_separation) require_positive("ring_separation", *ring_separation);
}

void Material::validate() const {
  require_positive("pair_density", pair_density);
  require_positive("london_depth", london_depth);
  require_positive("optical_skin_depth", optical_skin_depth);
}

EffectiveRadiusRule EffectiveRadiusRule::Explicit(double radius) {
  require_positive("effective_radius", radius);
  return EffectiveRadiusRule(Kind::kExplicit, radius);
}

double EffectiveRadiusRule::radius_for(const RingDesign& design) const {
  switch (kind_) {
    case Kind::kRosa:
      return 0.2235 * (design.width + design.depth);
    case Kind::kHalfMean:
      return (design.width + design.depth) / 4.0;
    case Kind::kExplicit:
      return radius_;
  }
  return radius_;
}

std::string EffectiveRadiusRule::name() const {
  switch (kind_) {
    case Kind::kRosa:
      return "rosa";
    case Kind::kHalfMean:
      return "half-mean";
    case Kind::kExplicit:
      return "explicit";
  }
  return "explicit";
}

double self_inductance(const RingDesign& design, const EffectiveRadiusRule& rule) {
  design.validate();
  const double a = rule.radius_for(design);
  double log_term = std::log(8.0 * design.radius / a) - 2.0;
  // 8r/a == e^2 is the admissible boundary; absorb rounding there.
  constexpr double kBoundarySlack = 1e-12;
  if (log_term < 0.0 && log_term > -kBoundarySlack) log_term = 0.0;
  if (log_term < 0.0) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "ln(8r/a) - 2 = %.6g < 0 (r = %.6g m, a = %.6g m): wire too thick",
                  log_term, design.radius, a);
    throw NonPositiveLog(msg);
  }
  return constants::kMu0 * design.radius * log_term;
}

double kinetic_inductance(const RingDesign& design, const Material& material) {
  design.validate();
  material.validate();
  const double q = constants::kCooperCharge;
  return 2.0 * kPi * design.radius * constants::kCooperMass /
         (material.pair_density * q * q * design.width * design.depth);
}

RingParams derive_ring_params(const RingDesign& design, const Material& material,
                              const EffectiveRadiusRule& rule) {
  RingParams params;
  params.design = design;
  params.material = material;
  params.self_inductance = self_inductance(design, rule);
  params.kinetic_inductance = kinetic_inductance(design, material);
  params.total_inductance = params.self_inductance + params.kinetic_inductance;
  params.pair_count =
      material.pair_density * (2.0 * kPi * design.radius) * (design.width * design.depth);
  return params;
}

double level_energy(int n, const RingParams& params) {
  const double flux = n * constants::kFluxQuantum;
  return flux * flux / (2.0 * params.total_inductance);
}

double level_angular_frequency(int n, const RingParams& params) {
  return level_energy(n, params) / constants::kHbar;
}

double transition_angular_frequency(int n, int m, const RingParams& params) {
  return (level_energy(n, params) - level_energy(m, params)) / constants::kHbar;
}

double level_supercurrent(int n, const RingParams& params) {
  return n * constants::kFluxQuantum / params.total_inductance;
}

template <std::floating_point T>
std::complex<T> ring_wavefunction(int n, const RingParams& params, T phi,
                                  std::type_identity_t<T> t) {
  const T norm = std::sqrt(static_cast<T>(params.pair_count) / (2 * std::numbers::pi_v<T>));
  const T omega = static_cast<T>(level_angular_frequency(n, params));
  return std::polar(norm, -(n * phi + omega * t));
}

template std::complex<double> ring_wavefunction<double>(int, const RingParams&, double,
                                                        double);
template std::complex<long double> ring_wavefunction<long double>(int, const RingParams&,
                                                                  long double, long double);

double vacuum_wavelength(double angular_frequency) {
  return 2.0 * kPi * constants::kSpeedOfLight / angular_frequency;
}

}  // namespace fluxring
