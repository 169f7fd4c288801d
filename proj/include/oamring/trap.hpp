/*
  Copyright 2026 The oamring Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "oamring/constants.hpp"

namespace oamring {

/// Physical trap description in SI units.
struct TrapSpec {
  double mass_kg = k39::mass_kg;
  double radius_m = k39::radius_m;          // semimajor axis when eccentric
  double omega_perp_rad_s = k39::omega_perp_rad_s;
  double eccentricity = 0.0;
  double tilt_amplitude_j = 0.0;            // V0 of V0 cos(alpha - alpha0)
  double tilt_phase_rad = 0.0;
  double flux_action_js = 0.0;              // gamma * Phi

  /// Transverse ground-state width sqrt(hbar / m omega_perp).
  double transverse_width_m() const;
};

/// The same trap in units hbar = m = R = 1.
struct RingParameters {
  double omega_perp = 1.0;
  double eccentricity = 0.0;
  double tilt_amplitude = 0.0;
  double tilt_phase = 0.0;
  double flux_angle = 0.0;  // gamma Phi / hbar

  double transverse_width() const;  // sigma_u / R = 1/sqrt(omega_perp)
};

UnitSystem make_unit_system(const TrapSpec& trap);

/// Throws InvalidParameter for non-positive mass, radius or frequency, or a
/// negative tilt.
void validate(const TrapSpec& trap);

RingParameters to_internal(const TrapSpec& trap);

/// Soft limits of the perturbative corrections. Each violated limit yields one
/// human-readable line; an empty vector means the trap is inside all of them.
std::vector<std::string> perturbative_warnings(const RingParameters& ring);

}  // namespace oamring
