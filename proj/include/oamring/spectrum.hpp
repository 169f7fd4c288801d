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

#include <optional>
#include <string>
#include <vector>

#include "oamring/trap.hpp"

namespace oamring {

struct Corrections {
  bool tilt = false;
  bool centrifugal = false;
  bool ellipticity = false;

  bool any() const noexcept { return tilt || centrifugal || ellipticity; }
};

/// Energies E(l), l = -L..L, in units of hbar^2/(m R^2).
class DispersionModel {
 public:
  DispersionModel() = default;
  DispersionModel(int cutoff, std::vector<double> energies, Corrections included,
                  std::vector<std::string> warnings = {});

  int cutoff() const noexcept { return cutoff_; }
  double operator()(int l) const { return energies_[static_cast<std::size_t>(l + cutoff_)]; }
  const std::vector<double>& energies() const noexcept { return energies_; }
  const Corrections& included() const noexcept { return included_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  int cutoff_ = 0;
  std::vector<double> energies_;
  Corrections included_;
  std::vector<std::string> warnings_;
};

/// Energy shift together with an optional note that the perturbative regime
/// was left.
struct Shift {
  double energy = 0.0;
  std::optional<std::string> warning;
};

// --- internal units (hbar = m = R = 1) -------------------------------------

inline constexpr double kIdealRevivalTime = 6.283185307179586;  // 2 pi

double ideal_energy(int l) noexcept;

/// Second-order shift of a weak potential V0 cos(alpha - alpha0):
/// (V0^2/4) / (l^2 - 1/4).
Shift tilt_shift(int l, const RingParameters& ring);

/// Radial displacement of the transverse minimum, (l^2 - 1/4) / omega^2.
double centrifugal_displacement(int l, const RingParameters& ring);

/// Transverse energy of radial level k including the centrifugal lowering,
/// omega (k + 1/2) - (l^2 - 1/4)^2 / (2 omega^2).
double centrifugal_shift(int l, int k, const RingParameters& ring);

/// First-order eccentricity shift,
/// (eps^2 / 8 pi) (1 + 3 u_l) (l^2 - 1/4).
Shift ellipticity_shift(int l, const RingParameters& ring);

DispersionModel ideal_dispersion(int cutoff);
DispersionModel corrected_dispersion(const RingParameters& ring, int cutoff,
                                     Corrections corrections);

// --- SI wrappers ------------------------------------------------------------

double revival_time(const TrapSpec& trap);  // seconds
double tilt_shift_si(int l, const TrapSpec& trap);
double centrifugal_displacement_si(int l, const TrapSpec& trap);
double centrifugal_shift_si(int l, int k, const TrapSpec& trap);
double ellipticity_shift_si(int l, const TrapSpec& trap);

// --- eccentricity oracle ----------------------------------------------------

/// First-order shift of the pair {l, -l} obtained numerically from the
/// eccentric-anomaly perturbation operator. Matrix elements are computed by
/// quadrature in beta with u replaced by its radial expectation -u_l (and
/// u^2 by u_l^2); degenerate +-l levels are resolved by diagonalising the
/// 2x2 block.
struct EllipticityOracle {
  int l = 0;
  double lower = 0.0;       // first-order shifts of the two eigenvectors
  double upper = 0.0;
  double closed_form = 0.0; // ellipticity_shift(l).energy
  /// (lower + upper) / (2 closed_form); 1 means agreement.
  double ratio = 0.0;
};

EllipticityOracle ellipticity_first_order_numeric(int l, const RingParameters& ring,
                                                  int quadrature_points = 256);

}  // namespace oamring
