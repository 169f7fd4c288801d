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

namespace oamring {

// CODATA 2018 values. Not configurable.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;            // J s
  static constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
  static constexpr double bohr_radius = 5.29177210903e-11;   // m
  static constexpr double elementary_charge = 1.602176634e-19;  // C
  static constexpr double standard_gravity = 9.80665;        // m/s^2
  static constexpr double speed_of_light = 299792458.0;      // m/s
};

namespace k39 {
inline constexpr double mass_u = 38.96370668;
inline constexpr double mass_kg = mass_u * PhysicalConstants::atomic_mass_unit;
inline constexpr double radius_m = 5.9e-6;
inline constexpr double omega_perp_rad_s = 6.4e3;
inline constexpr double atom_number = 2.0e4;
inline constexpr double scattering_length_m = PhysicalConstants::bohr_radius;
}  // namespace k39

/// Scaling in which hbar = m = R = 1.
///
/// Energies are measured in hbar^2/(m R^2), times in m R^2/hbar and lengths
/// in R. The ideal revival time is exactly 2*pi in these units.
class UnitSystem {
 public:
  UnitSystem(double mass_kg, double radius_m,
             double hbar = PhysicalConstants::hbar);

  double mass() const noexcept { return mass_; }
  double hbar() const noexcept { return hbar_; }
  double length_unit() const noexcept { return length_; }
  double time_unit() const noexcept { return time_; }
  double energy_unit() const noexcept { return energy_; }
  double frequency_unit() const noexcept { return 1.0 / time_; }
  /// Unit of gamma*Phi (and of any action).
  double action_unit() const noexcept { return hbar_; }

  double time_to_internal(double seconds) const noexcept { return seconds / time_; }
  double time_to_si(double t) const noexcept { return t * time_; }
  double energy_to_internal(double joules) const noexcept { return joules / energy_; }
  double energy_to_si(double e) const noexcept { return e * energy_; }
  double length_to_internal(double metres) const noexcept { return metres / length_; }
  double length_to_si(double x) const noexcept { return x * length_; }
  double frequency_to_internal(double rad_s) const noexcept { return rad_s * time_; }
  double frequency_to_si(double w) const noexcept { return w / time_; }
  double action_to_internal(double js) const noexcept { return js / hbar_; }
  double action_to_si(double a) const noexcept { return a * hbar_; }

 private:
  double mass_;
  double hbar_;
  double length_;
  double time_;
  double energy_;
};

}  // namespace oamring
