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

#ifndef FLUXRING_RING_H_
#define FLUXRING_RING_H_

#include <complex>
#include <concepts>
#include <optional>
#include <string>
#include <type_traits>

namespace fluxring {

// Default truncation |n| <= 8 of the winding basis. l = 1 couplings reach
// |dn| <= 4; the rest is convergence headroom.
inline constexpr int kDefaultNMax = 8;

// Geometry of a thin superconducting ring. Lengths in meters.
struct RingDesign {
  double radius = 0.0;
  double width = 0.0;
  double depth = 0.0;
  std::optional<double> ring_separation;  // center-to-center, coaxial pair

  // Throws ValidationError naming the offending field. Requires positive
  // dimensions and a thin wire (width < radius / 10).
  void validate() const;
};

struct Material {
  double pair_density = 0.0;        // Cooper pairs per m^3
  double london_depth = 0.0;        // m
  double optical_skin_depth = 0.0;  // m

  void validate() const;
};

// How the effective wire radius a in L_S = mu0 r [ln(8r/a) - 2] is chosen
// for a rectangular w x d cross-section.
class EffectiveRadiusRule {
 public:
  enum class Kind { kRosa, kHalfMean, kExplicit };

  // a = 0.2235 (w + d), the geometric-mean-distance equivalent.
  static EffectiveRadiusRule Rosa() { return EffectiveRadiusRule(Kind::kRosa, 0.0); }
  // a = (w + d) / 4.
  static EffectiveRadiusRule HalfMean() { return EffectiveRadiusRule(Kind::kHalfMean, 0.0); }
  static EffectiveRadiusRule Explicit(double radius);

  Kind kind() const { return kind_; }
  double radius_for(const RingDesign& design) const;
  std::string name() const;

 private:
  EffectiveRadiusRule(Kind kind, double radius) : kind_(kind), radius_(radius) {}

  Kind kind_;
  double radius_;
};

// Electrical model of one ring: everything the spectrum and couplings need.
struct RingParams {
  double self_inductance = 0.0;     // H
  double kinetic_inductance = 0.0;  // H
  double total_inductance = 0.0;    // H, exactly L_S + L_K
  double pair_count = 0.0;          // N*, Cooper pairs in the ring
  RingDesign design;
  Material material;
};

// mu0 r [ln(8r/a) - 2]. Throws NonPositiveLog when 8r/a <= e^2.
double self_inductance(const RingDesign& design,
                       const EffectiveRadiusRule& rule = EffectiveRadiusRule::Rosa());

// 2 pi r m* / (n* q*^2 w d).
double kinetic_inductance(const RingDesign& design, const Material& material);

RingParams derive_ring_params(const RingDesign& design, const Material& material,
                              const EffectiveRadiusRule& rule = EffectiveRadiusRule::Rosa());

// Fluxoid-quantized level energy (n Phi0)^2 / (2 L_T).
double level_energy(int n, const RingParams& params);

// omega_n = E_n / hbar; the phase rate of level n.
double level_angular_frequency(int n, const RingParams& params);

// omega_{n,m} = (E_n - E_m) / hbar.
double transition_angular_frequency(int n, int m, const RingParams& params);

// Signed supercurrent n Phi0 / L_T.
double level_supercurrent(int n, const RingParams& params);

// Psi_n(phi, t) = sqrt(N* / 2pi) exp(-i (n phi + omega_n t)). Instantiated
// for double and long double.
template <std::floating_point T>
std::complex<T> ring_wavefunction(int n, const RingParams& params, T phi,
                                  std::type_identity_t<T> t);

// 2 pi c / omega.
double vacuum_wavelength(double angular_frequency);

}  // namespace fluxring

#endif  // FLUXRING_RING_H_
