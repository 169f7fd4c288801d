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

#include "oamring/sensing.hpp"

#include <cmath>
#include <numbers>

#include "oamring/error.hpp"

namespace oamring::sensing {

using std::numbers::pi;
using PC = PhysicalConstants;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double flux_action(const GaugeScenario& scenario, const TrapSpec& trap) {
  validate(trap);
  const double r = trap.radius_m;
  return std::visit(
      overloaded{
          [&](const ChargedMagnetic& s) { return s.charge_c * s.field_t * pi * r * r; },
          [&](const AharonovCasher& s) {
            return 2.0 * pi * r * s.line_field_v_per_m * s.dipole_j_per_t /
                   (PC::speed_of_light * PC::speed_of_light);
          },
          // gamma A = p x B is azimuthal with magnitude p B for a radial dipole
          // in an axial field.
          [&](const ElectricDipoleMagnetic& s) { return 2.0 * pi * r * s.dipole_c_m * s.field_t; },
          // gamma A = m R^2 omega along the ring, circulated over 2 pi.
          [&](const RotatingFrame& s) { return 2.0 * pi * trap.mass_kg * r * r * s.rotation_rad_s; },
      },
      scenario);
}

double rotation_angle(const GaugeScenario& scenario, const TrapSpec& trap) {
  return flux_action(scenario, trap) / PC::hbar;
}

double dispersion_time(const TrapSpec& trap) {
  validate(trap);
  return 1.0 / trap.omega_perp_rad_s;
}

double gravitational_phase(double tilt_rad, const TrapSpec& trap, double pulse_s) {
  if (std::abs(tilt_rad) > pi / 2) fail(ErrorCode::InvalidParameter, "tilt must satisfy |theta| <= pi/2");
  if (!(pulse_s > 0.0)) fail(ErrorCode::InvalidParameter, "pulse duration must be positive");
  return 2.0 * trap.mass_kg * PC::standard_gravity * trap.radius_m * pulse_s * std::sin(tilt_rad) /
         PC::hbar;
}

double scattering_phase(double scattering_length_m, double density_per_m3, double pulse_s,
                        const TrapSpec& trap) {
  if (!(density_per_m3 > 0.0)) fail(ErrorCode::InvalidParameter, "density must be positive");
  return 4.0 * pi * PC::hbar * scattering_length_m * density_per_m3 * pulse_s / trap.mass_kg;
}

double peak_density(double atom_number, const TrapSpec& trap) {
  const double s = trap.transverse_width_m();
  return atom_number / (std::pow(2.0 * pi, 1.5) * s * s * s);
}

double mean_density(double atom_number, const TrapSpec& trap) {
  // <n> = int n^2 / N for a Gaussian cloud, a factor 2^{-3/2} below the peak.
  return peak_density(atom_number, trap) / std::pow(2.0, 1.5);
}

double scattering_length_resolution(double phase_resolution_rad, double density_per_m3,
                                    double pulse_s, const TrapSpec& trap) {
  const double per_metre = scattering_phase(1.0, density_per_m3, pulse_s, trap);
  return phase_resolution_rad / per_metre;
}

double min_detectable_field(double resolution_rad, double charge_c, const TrapSpec& trap) {
  if (charge_c == 0.0) fail(ErrorCode::NotApplicable, "neutral particles do not couple to B");
  if (!(resolution_rad > 0.0)) fail(ErrorCode::InvalidParameter, "resolution must be positive");
  return PC::hbar * resolution_rad / (std::abs(charge_c) * pi * trap.radius_m * trap.radius_m);
}

}  // namespace oamring::sensing
