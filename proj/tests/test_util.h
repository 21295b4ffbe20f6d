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

#ifndef FLUXRING_TESTS_TEST_UTIL_H_
#define FLUXRING_TESTS_TEST_UTIL_H_

#include <cmath>
#include <random>

#include "fluxring/ring.h"

namespace fluxring::testing {

// r = 2 um, w = 60 nm, d = 10 nm aluminum ring, n* = 2.1e28 m^-3.
inline RingDesign paper_design() {
  RingDesign design;
  design.radius = 2e-6;
  design.width = 60e-9;
  design.depth = 10e-9;
  design.ring_separation = 1e-4;
  return design;
}

inline Material aluminum() {
  Material material;
  material.pair_density = 2.1e28;
  material.london_depth = 50e-9;
  material.optical_skin_depth = 7e-9;
  return material;
}

inline RingParams paper_params() { return derive_ring_params(paper_design(), aluminum()); }

// Same ring, but with L_T pinned to the quoted 31.3 pH by scaling L_K.
inline RingParams params_with_total_inductance(double total) {
  RingParams params = paper_params();
  params.kinetic_inductance = total - params.self_inductance;
  params.total_inductance = total;
  return params;
}

inline double relative_error(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

inline std::mt19937_64 test_rng() { return std::mt19937_64(0x5eed'f1u); }

}  // namespace fluxring::testing

#endif  // FLUXRING_TESTS_TEST_UTIL_H_
