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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oamring/error.hpp"
#include "oamring/observables.hpp"
#include "oamring/propagator.hpp"
#include "oamring/spectrum.hpp"

using namespace oamring;
using std::numbers::pi;

namespace {

// Shifts of l^2/2 + v0 cos(a - a0) from dense diagonalisation in |l| <= lmax.
// Returns the mean of the +-l pair for l >= 1 (they are degenerate at zeroth order).
std::vector<double> tilt_shifts_dense(double v0, double a0, int lmax, int lcount) {
  const int n = 2 * lmax + 1;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int l = i - lmax;
    h(i, i) = 0.5 * l * l;
    if (i + 1 < n) {
      h(i + 1, i) = 0.5 * v0 * std::polar(1.0, -a0);
      h(i, i + 1) = std::conj(h(i + 1, i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const auto& ev = es.eigenvalues();
  std::vector<double> out;
  out.push_back(ev(0));
  for (int l = 1; l < lcount; ++l) out.push_back(0.5 * (ev(2 * l - 1) + ev(2 * l)) - 0.5 * l * l);
  return out;
}

}  // namespace

TEST_CASE("dimensionless substitutions") {
  RingParameters ring;
  ring.omega_perp = 1.0;
  CHECK(centrifugal_displacement(1, ring) == doctest::Approx(0.75));
  CHECK(centrifugal_displacement(0, ring) == doctest::Approx(-0.25));
  CHECK(centrifugal_shift(0, 0, ring) == doctest::Approx(0.46875).epsilon(1e-15));
  CHECK_THROWS_AS(centrifugal_shift(0, -1, ring), Error);

  ring.tilt_amplitude = 0.01;
  CHECK(tilt_shift(0, ring).energy == doctest::Approx(-1e-4).epsilon(1e-14));
  CHECK(tilt_shift(1, ring).energy == doctest::Approx(1e-4 / 3.0).epsilon(1e-14));
  CHECK_FALSE(tilt_shift(1, ring).warning);
  ring.tilt_amplitude = 0.2;
  CHECK(tilt_shift(1, ring).warning);

  RingParameters flat;
  flat.omega_perp = 1e6;
  flat.eccentricity = 0.0;
  CHECK(ellipticity_shift(3, flat).energy == 0.0);
  flat.eccentricity = 0.3;
  CHECK(ellipticity_shift(0, flat).energy == doctest::Approx(-0.09 / (32.0 * pi)).epsilon(1e-9));
  CHECK(ellipticity_shift(2, flat).energy > 0.0);
  flat.eccentricity = 0.7;
  CHECK(ellipticity_shift(2, flat).warning);
}

TEST_CASE("potassium ring centrifugal magnitudes") {
  const TrapSpec trap;
  const auto& c = PhysicalConstants::hbar;
  const double rot = c * c * 625.0 / (2.0 * trap.mass_kg * trap.radius_m * trap.radius_m);
  const double quartic = 0.5 * c * trap.omega_perp_rad_s - centrifugal_shift_si(25, 0, trap);
  // hbar^2 (l^2 - 1/4)^2 / (m^2 w^2 R^4 l^2) evaluated by hand.
  CHECK(quartic / rot == doctest::Approx(0.033427054834961924).epsilon(1e-12));
  CHECK(centrifugal_displacement_si(25, trap) / trap.radius_m ==
        doctest::Approx(0.033440431007364872).epsilon(1e-12));
  CHECK(revival_time(trap) == doctest::Approx(0.13418905473201637).epsilon(1e-12));
}

TEST_CASE("centrifugal shift is a completed square") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> ls(-60, 60), ks(0, 4);
  std::uniform_real_distribution<double> ws(0.5, 500.0);
  for (int i = 0; i < 20; ++i) {
    RingParameters ring;
    ring.omega_perp = ws(rng);
    const int l = ls(rng), k = ks(rng);
    const double w = ring.omega_perp;
    const double q = l * l - 0.25;
    // Radial energy w^2 u^2 / 2 - q u at its minimum.
    const double u = centrifugal_displacement(l, ring);
    CHECK(w * w * u - q == doctest::Approx(0.0).epsilon(1e-12).scale(q));
    const double completed = w * (k + 0.5) + 0.5 * w * w * u * u - q * u;
    CHECK(centrifugal_shift(l, k, ring) == doctest::Approx(completed).epsilon(1e-12));
    CHECK(centrifugal_shift(l, k, ring) ==
          doctest::Approx(w * (k + 0.5) - 0.5 * w * w * u * u).epsilon(1e-12));
  }
}

TEST_CASE("tilt shift against dense diagonalisation") {
  const int lcount = 6;
  std::vector<std::vector<double>> dev;
  for (double v0 : {0.04, 0.02, 0.01}) {
    RingParameters ring;
    ring.tilt_amplitude = v0;
    ring.tilt_phase = 0.37;
    const auto dense = tilt_shifts_dense(v0, ring.tilt_phase, 40, lcount);
    std::vector<double> d;
    for (int l = 0; l < lcount; ++l) {
      const double predicted = tilt_shift(l, ring).energy;
      d.push_back(std::abs(dense[l] / predicted - 1.0));
    }
    dev.push_back(d);
  }
  for (int l = 0; l < lcount; ++l) {
    CAPTURE(l);
    CHECK(dev[2][l] < 0.02);
    if (l > 3) continue;  // deviation drowns in eigensolver rounding
    // O(V0^4) error makes the relative deviation fall by four per halving.
    CHECK(dev[0][l] / dev[1][l] == doctest::Approx(4.0).epsilon(0.05));
    CHECK(dev[1][l] / dev[2][l] == doctest::Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("ellipticity oracle reports the first-order diagonal") {
  RingParameters ring;
  ring.omega_perp = 136.68;
  ring.eccentricity = 0.1;
  for (int l : {0, 1, 2, 5, 25}) {
    CAPTURE(l);
    const auto o = ellipticity_first_order_numeric(l, ring);
    const double ul = centrifugal_displacement(l, ring);
    const double diagonal = 0.01 * (1.0 - 3.0 * ul) * (l * l - 0.25) / 4.0;
    CHECK(0.5 * (o.lower + o.upper) == doctest::Approx(diagonal).epsilon(1e-12));
    CHECK(o.ratio == doctest::Approx(2.0 * pi * (1.0 - 3.0 * ul) / (1.0 + 3.0 * ul)).epsilon(1e-12));
  }
  // The cos 2b coupling only splits the l = +-1 pair.
  const auto one = ellipticity_first_order_numeric(1, ring);
  CHECK(one.upper - one.lower > 1e-4);
  const auto two = ellipticity_first_order_numeric(2, ring);
  CHECK(two.upper - two.lower < 1e-14);
}

TEST_CASE("dispersion is even in l") {
  RingParameters ring;
  ring.omega_perp = 50.0;
  ring.tilt_amplitude = 0.03;
  ring.eccentricity = 0.2;
  for (int mask = 0; mask < 8; ++mask) {
    const Corrections c{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    const auto model = corrected_dispersion(ring, 64, c);
    for (int l = 1; l <= 64; ++l) CHECK(model(l) == model(-l));
  }
  const auto none = corrected_dispersion(ring, 16, {});
  const auto ideal = ideal_dispersion(16);
  for (int l = -16; l <= 16; ++l) CHECK(none(l) == ideal(l));
  RingParameters bare;
  bare.omega_perp = 50.0;
  const auto all = corrected_dispersion(bare, 16, {true, true, true});
  const auto centri = corrected_dispersion(bare, 16, {false, true, false});
  for (int l = -16; l <= 16; ++l) CHECK(all(l) == doctest::Approx(centri(l)).epsilon(1e-15));
}

TEST_CASE("quadratic spectra revive perfectly") {
  const SpectralState psi = gaussian_packet(0.3, 0.15, 96);
  const SpectralState target = rotate(psi, pi);
  for (double a : {0.5, 0.5 * 1.0013, 0.731, 2.0}) {
    std::vector<double> e;
    for (int l = -96; l <= 96; ++l) e.push_back(a * l * l);
    const DispersionModel model(96, e, {});
    CHECK(fidelity(evolve_linear(psi, pi / a, model), target) > 1.0 - 1e-12);
  }
}

TEST_CASE("quartic term costs revival fidelity") {
  RingParameters ring;
  ring.omega_perp = 30.0;
  const SpectralState psi = gaussian_packet(0.0, 0.3, 64);
  const auto model = corrected_dispersion(ring, 64, {false, true, false});
  double best = 0.0;
  for (int i = -200; i <= 200; ++i) {
    const double t = kIdealRevivalTime * (1.0 + 0.0002 * i);
    best = std::max(best, fidelity(evolve_linear(psi, t, model), rotate(psi, pi)));
  }
  CHECK(best < 1.0 - 1e-6);
}
