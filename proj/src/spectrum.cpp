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

#include "oamring/spectrum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "oamring/error.hpp"

namespace oamring {

using std::numbers::pi;

DispersionModel::DispersionModel(int cutoff, std::vector<double> energies, Corrections included,
                                 std::vector<std::string> warnings)
    : cutoff_(cutoff),
      energies_(std::move(energies)),
      included_(included),
      warnings_(std::move(warnings)) {
  if (cutoff < 0 || energies_.size() != static_cast<std::size_t>(2 * cutoff + 1))
    fail(ErrorCode::InvalidParameter, "dispersion table must hold 2L+1 energies");
}

double ideal_energy(int l) noexcept { return 0.5 * static_cast<double>(l) * l; }

namespace {

double l2_minus_quarter(int l) { return static_cast<double>(l) * l - 0.25; }

}  // namespace

Shift tilt_shift(int l, const RingParameters& ring) {
  const double v0 = ring.tilt_amplitude;
  Shift s{0.25 * v0 * v0 / l2_minus_quarter(l), std::nullopt};
  if (v0 >= 0.1) {
    std::ostringstream os;
    os << "tilt amplitude " << v0 << " hbar^2/mR^2 is outside the second-order regime (< 0.1)";
    s.warning = os.str();
  }
  return s;
}

double centrifugal_displacement(int l, const RingParameters& ring) {
  return l2_minus_quarter(l) / (ring.omega_perp * ring.omega_perp);
}

double centrifugal_shift(int l, int k, const RingParameters& ring) {
  if (k < 0) fail(ErrorCode::InvalidParameter, "transverse quantum number must be >= 0");
  const double q = l2_minus_quarter(l);
  const double w = ring.omega_perp;
  return w * (k + 0.5) - q * q / (2.0 * w * w);
}

Shift ellipticity_shift(int l, const RingParameters& ring) {
  const double eps = ring.eccentricity;
  const double u = centrifugal_displacement(l, ring);
  Shift s{eps * eps / (8.0 * pi) * (1.0 + 3.0 * u) * l2_minus_quarter(l), std::nullopt};
  if (eps > 0.5) {
    std::ostringstream os;
    os << "eccentricity " << eps << " is outside the first-order regime (<= 0.5)";
    s.warning = os.str();
  }
  return s;
}

DispersionModel ideal_dispersion(int cutoff) {
  std::vector<double> e(static_cast<std::size_t>(2 * cutoff + 1));
  for (int l = -cutoff; l <= cutoff; ++l) e[static_cast<std::size_t>(l + cutoff)] = ideal_energy(l);
  return DispersionModel(cutoff, std::move(e), Corrections{});
}

DispersionModel corrected_dispersion(const RingParameters& ring, int cutoff,
                                     Corrections corrections) {
  if (cutoff < 0) fail(ErrorCode::InvalidParameter, "cutoff must be non-negative");
  std::vector<std::string> warnings;
  if (corrections.any()) {
    for (auto& w : perturbative_warnings(ring)) warnings.push_back(std::move(w));
  }
  // The zero-point energy omega_perp/2 of the transverse ground state is l
  // independent and left out.
  const double zero_point = 0.5 * ring.omega_perp;
  std::vector<double> e(static_cast<std::size_t>(2 * cutoff + 1));
  for (int l = -cutoff; l <= cutoff; ++l) {
    double energy = ideal_energy(l);
    if (corrections.tilt) energy += tilt_shift(l, ring).energy;
    if (corrections.centrifugal) energy += centrifugal_shift(l, 0, ring) - zero_point;
    if (corrections.ellipticity) energy += ellipticity_shift(l, ring).energy;
    e[static_cast<std::size_t>(l + cutoff)] = energy;
  }
  return DispersionModel(cutoff, std::move(e), corrections, std::move(warnings));
}

double revival_time(const TrapSpec& trap) {
  return kIdealRevivalTime * make_unit_system(trap).time_unit();
}

double tilt_shift_si(int l, const TrapSpec& trap) {
  return make_unit_system(trap).energy_to_si(tilt_shift(l, to_internal(trap)).energy);
}

double centrifugal_displacement_si(int l, const TrapSpec& trap) {
  return make_unit_system(trap).length_to_si(centrifugal_displacement(l, to_internal(trap)));
}

double centrifugal_shift_si(int l, int k, const TrapSpec& trap) {
  return make_unit_system(trap).energy_to_si(centrifugal_shift(l, k, to_internal(trap)));
}

double ellipticity_shift_si(int l, const TrapSpec& trap) {
  return make_unit_system(trap).energy_to_si(ellipticity_shift(l, to_internal(trap)).energy);
}

EllipticityOracle ellipticity_first_order_numeric(int l, const RingParameters& ring,
                                                  int quadrature_points) {
  using cplx = std::complex<double>;
  if (quadrature_points < 8) fail(ErrorCode::InvalidParameter, "too few quadrature points");
  const double eps2 = ring.eccentricity * ring.eccentricity;
  const double ul = centrifugal_displacement(l, ring);
  const double u = -ul;     // <u> in the shifted radial ground state
  const double u2 = ul * ul;

  // <row| H_eps |col> with H_eps acting on exp(i col beta).
  auto element = [&](int row, int col) {
    cplx sum = 0.0;
    for (int j = 0; j < quadrature_points; ++j) {
      const double b = 2.0 * pi * j / quadrature_points;
      const double c2 = std::cos(2.0 * b);
      const double s2 = std::sin(2.0 * b);
      const double second = -static_cast<double>(col) * col;  // d^2/dbeta^2
      const cplx first(0.0, static_cast<double>(col));        // d/dbeta
      const cplx h = -0.25 * (1.0 + 3.0 * u + (1.0 + 5.0 * u) * c2) * second +
                     0.5 * (1.0 + 5.0 * u + 9.0 * u2) * s2 * first -
                     (1.0 / 16.0) * (1.0 + 3.0 * u - (1.0 + 11.0 * u) * c2);
      sum += std::polar(1.0, (col - row) * b) * h;
    }
    return eps2 * sum / static_cast<double>(quadrature_points);
  };

  EllipticityOracle out;
  out.l = l;
  out.closed_form = ellipticity_shift(l, ring).energy;
  if (l == 0) {
    out.lower = out.upper = element(0, 0).real();
  } else {
    const cplx a = element(l, l), b = element(l, -l), c = element(-l, l), d = element(-l, -l);
    const cplx mean = 0.5 * (a + d);
    const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    const double e1 = (mean - disc).real(), e2 = (mean + disc).real();
    out.lower = std::min(e1, e2);
    out.upper = std::max(e1, e2);
  }
  out.ratio = 0.5 * (out.lower + out.upper) / out.closed_form;
  return out;
}

}  // namespace oamring
