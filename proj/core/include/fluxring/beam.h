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

#ifndef FLUXRING_BEAM_H_
#define FLUXRING_BEAM_H_

#include <complex>
#include <concepts>
#include <string>
#include <type_traits>
#include <vector>

namespace fluxring {

// Transverse Jones vector (e_x, e_y), unit norm.
class Polarization {
 public:
  static Polarization LinearX();
  static Polarization LinearY();
  // (x - i y) / sqrt(2).
  static Polarization RightCircular();
  // (x + i y) / sqrt(2).
  static Polarization LeftCircular();
  // Throws ValidationError unless |ex|^2 + |ey|^2 = 1 to 1e-12.
  static Polarization FromJones(std::complex<double> ex, std::complex<double> ey);

  std::complex<double> ex() const { return ex_; }
  std::complex<double> ey() const { return ey_; }

 private:
  Polarization(std::complex<double> ex, std::complex<double> ey) : ex_(ex), ey_(ey) {}

  std::complex<double> ex_;
  std::complex<double> ey_;
};

// LG_p^l drive evaluated on the ring: A = eps A0 exp(-i(l phi + omega t)) + c.c.
// The radial profile is folded into the complex amplitude a0 (kg m / (s^2 A)).
struct BeamDrive {
  int oam_index = 1;
  double omega = 0.0;  // rad/s, > 0
  std::complex<double> a0{0.0, 0.0};
  Polarization polarization = Polarization::LinearX();

  void validate() const;
};

// One azimuthal harmonic a exp(-i (k phi + s omega t)).
struct HarmonicTerm {
  int winding = 0;
  std::complex<double> amplitude{0.0, 0.0};
  int time_sign = 1;  // +1 or -1

  bool operator==(const HarmonicTerm&) const = default;
};

// Azimuthal component A_phi,ext(phi, t) as a finite harmonic sum. Real fields
// carry each term together with its conjugate partner (-k, conj(a), -s).
struct HarmonicDrive {
  std::vector<HarmonicTerm> terms;
  double omega = 0.0;
};

enum class IntensityConvention {
  // |A0| = sqrt(2 I / (c eps0 omega^2)).
  kPaperConsistent,
  // Half of the above: 2|A0| is the peak vector-potential amplitude.
  kPeakField,
};

std::string to_string(IntensityConvention convention);

// |A0| for a beam of intensity I (W/m^2) at angular frequency omega.
double amplitude_from_intensity(double intensity, double omega,
                                IntensityConvention convention =
                                    IntensityConvention::kPaperConsistent);

// Projects eps onto phi-hat (eps_phi = -e_x sin(phi) + e_y cos(phi)) and
// expands into windings l - 1 and l + 1, each with its conjugate partner.
// Terms with exactly zero amplitude are dropped.
HarmonicDrive azimuthal_component(const BeamDrive& beam);

// Pointwise A_phi,ext(phi, t). Throws NonRealField if the imaginary residue
// exceeds 1e-14 of the summed term magnitudes. Instantiated for double and
// long double; the latter serves the quadrature oracles.
template <std::floating_point T>
T evaluate_a_phi(const HarmonicDrive& drive, T phi, std::type_identity_t<T> t);

// d A_phi,ext / d phi, evaluated term by term in closed form.
template <std::floating_point T>
T evaluate_a_phi_derivative(const HarmonicDrive& drive, T phi, std::type_identity_t<T> t);

// Sum of |a|^2 over terms with the given time sign. For s = +1 this is the
// azimuthal mean of the squared complex envelope eps_phi A0 e^{-i l phi}.
double harmonic_power(const HarmonicDrive& drive, int time_sign = +1);

}  // namespace fluxring

#endif  // FLUXRING_BEAM_H_
