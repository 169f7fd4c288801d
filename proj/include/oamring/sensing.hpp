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

#include <variant>

#include "oamring/trap.hpp"

namespace oamring::sensing {

struct ChargedMagnetic {
  double charge_c = PhysicalConstants::elementary_charge;
  double field_t = 0.0;  // uniform axial field
};

struct AharonovCasher {
  double dipole_j_per_t = 0.0;     // m0 along the axis
  double line_field_v_per_m = 0.0; // E0 at the ring
};

struct ElectricDipoleMagnetic {
  double dipole_c_m = 0.0;  // radial p
  double field_t = 0.0;     // axial B
};

struct RotatingFrame {
  double rotation_rad_s = 0.0;
};

using GaugeScenario =
    std::variant<ChargedMagnetic, AharonovCasher, ElectricDipoleMagnetic, RotatingFrame>;

/// gamma Phi in J s.
double flux_action(const GaugeScenario& scenario, const TrapSpec& trap);

/// Revival rotation angle gamma Phi / hbar.
double rotation_angle(const GaugeScenario& scenario, const TrapSpec& trap);

/// Revival lifetime 1/omega_perp.
double dispersion_time(const TrapSpec& trap);

/// 2 m g R t_d sin(theta) / hbar.
double gravitational_phase(double tilt_rad, const TrapSpec& trap, double pulse_s);

/// 4 pi hbar a n t_d / m.
double scattering_phase(double scattering_length_m, double density_per_m3, double pulse_s,
                        const TrapSpec& trap);

/// Peak and mean density of N atoms in the isotropic harmonic ground state of
/// frequency omega_perp.
double peak_density(double atom_number, const TrapSpec& trap);
double mean_density(double atom_number, const TrapSpec& trap);

/// Scattering-length resolution for a given phase resolution.
double scattering_length_resolution(double phase_resolution_rad, double density_per_m3,
                                    double pulse_s, const TrapSpec& trap);

/// Smallest uniform field whose revival rotation equals the angular resolution,
/// hbar * resolution / (q pi R^2). Throws NotApplicable for q = 0.
double min_detectable_field(double resolution_rad, double charge_c, const TrapSpec& trap);

}  // namespace oamring::sensing
