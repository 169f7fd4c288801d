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

#include "oamring/trap.hpp"

#include <cmath>
#include <sstream>

#include "oamring/error.hpp"

namespace oamring {

UnitSystem::UnitSystem(double mass_kg, double radius_m, double hbar)
    : mass_(mass_kg), hbar_(hbar), length_(radius_m) {
  if (!(mass_kg > 0.0) || !std::isfinite(mass_kg))
    fail(ErrorCode::InvalidParameter, "mass must be positive");
  if (!(radius_m > 0.0) || !std::isfinite(radius_m))
    fail(ErrorCode::InvalidParameter, "radius must be positive");
  if (!(hbar > 0.0)) fail(ErrorCode::InvalidParameter, "hbar must be positive");
  time_ = mass_kg * radius_m * radius_m / hbar;
  energy_ = hbar / time_;
}

double TrapSpec::transverse_width_m() const {
  return std::sqrt(PhysicalConstants::hbar / (mass_kg * omega_perp_rad_s));
}

double RingParameters::transverse_width() const { return 1.0 / std::sqrt(omega_perp); }

UnitSystem make_unit_system(const TrapSpec& trap) {
  return UnitSystem(trap.mass_kg, trap.radius_m);
}

void validate(const TrapSpec& trap) {
  if (!(trap.mass_kg > 0.0)) fail(ErrorCode::InvalidParameter, "mass must be positive");
  if (!(trap.radius_m > 0.0)) fail(ErrorCode::InvalidParameter, "radius must be positive");
  if (!(trap.omega_perp_rad_s > 0.0))
    fail(ErrorCode::InvalidParameter, "transverse frequency must be positive");
  if (trap.eccentricity < 0.0 || trap.eccentricity >= 1.0)
    fail(ErrorCode::InvalidParameter, "eccentricity must lie in [0, 1)");
  if (trap.tilt_amplitude_j < 0.0)
    fail(ErrorCode::InvalidParameter, "tilt amplitude must be non-negative");
  if (!std::isfinite(trap.flux_action_js))
    fail(ErrorCode::InvalidParameter, "flux must be finite");
}

RingParameters to_internal(const TrapSpec& trap) {
  validate(trap);
  const UnitSystem units = make_unit_system(trap);
  RingParameters ring;
  ring.omega_perp = units.frequency_to_internal(trap.omega_perp_rad_s);
  ring.eccentricity = trap.eccentricity;
  ring.tilt_amplitude = units.energy_to_internal(trap.tilt_amplitude_j);
  ring.tilt_phase = trap.tilt_phase_rad;
  ring.flux_angle = units.action_to_internal(trap.flux_action_js);
  return ring;
}

std::vector<std::string> perturbative_warnings(const RingParameters& ring) {
  std::vector<std::string> out;
  auto add = [&out](const char* what, double value, double limit) {
    std::ostringstream os;
    os << what << " = " << value << " exceeds the perturbative limit " << limit;
    out.push_back(os.str());
  };
  if (ring.eccentricity > 0.5) add("eccentricity", ring.eccentricity, 0.5);
  if (ring.tilt_amplitude >= 0.1) add("tilt amplitude (hbar^2/mR^2)", ring.tilt_amplitude, 0.1);
  if (ring.transverse_width() >= 0.2) add("sigma_u/R", ring.transverse_width(), 0.2);
  return out;
}

}  // namespace oamring
