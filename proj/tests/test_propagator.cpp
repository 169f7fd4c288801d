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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oamring/error.hpp"
#include "oamring/observables.hpp"
#include "oamring/propagator.hpp"

using namespace oamring;
using std::numbers::pi;

namespace {

constexpr double kTrev = kIdealRevivalTime;

double l2_distance(const GridState& a, const GridState& b) {
  double s = 0.0;
  for (int j = 0; j < a.points(); ++j) s += std::norm(a[j] - b[j]);
  return std::sqrt(s * a.spacing());
}

double max_diff(const SpectralState& a, const SpectralState& b) {
  double m = 0.0;
  for (int l = -a.cutoff(); l <= a.cutoff(); ++l) m = std::max(m, std::abs(a[l] - b[l]));
  return m;
}

double half_weight(const GridState& g, double center) {
  double s = 0.0;
  for (int j = 0; j < g.points(); ++j)
    if (std::abs(wrap_angle(g.angle(j) - center)) < 0.5 * pi) s += std::norm(g[j]);
  return s * g.spacing();
}

}  // namespace

TEST_CASE("half revival phases per l") {
  const int cutoff = 128;
  const auto model = ideal_dispersion(cutoff);
  const cplx i(0.0, 1.0);
  for (int l = -cutoff; l <= cutoff; ++l) {
    SpectralState s(cutoff);
    s[l] = 1.0;
    const cplx got = evolve_linear(s, 0.5 * kTrev, model)[l];
    const cplx expected = (l % 2 == 0) ? cplx(1.0) : -i;
    const cplx beam = std::exp(-i * pi / 4.0) / std::sqrt(2.0) * (1.0 + i * std::exp(i * pi * double(l)));
    CHECK(std::abs(got - expected) < 1e-10);
    CHECK(std::abs(got - beam) < 1e-10);
  }
}

TEST_CASE("beam splitter on a packet") {
  const SpectralState psi = gaussian_packet(0.0, 0.1, 128);
  const SpectralState half = half_revival_superposition(psi);
  const GridState g = to_grid(half, 512);
  CHECK(half_weight(g, 0.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(half_weight(g, pi) == doctest::Approx(0.5).epsilon(1e-10));

  const SpectralState twice = half_revival_superposition(half);
  CHECK(fidelity(twice, rotate(psi, pi)) > 1.0 - 1e-12);

  SpectralState uniform(8);
  uniform[0] = 1.0;
  CHECK(fidelity(half_revival_superposition(uniform), uniform) > 1.0 - 1e-15);
}

TEST_CASE("full revivals of random packets") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> center(-pi, pi), width(0.05, 0.9);
  const auto model = ideal_dispersion(128);
  for (int i = 0; i < 30; ++i) {
    const SpectralState psi = gaussian_packet(center(rng), width(rng), 128);
    CHECK(fidelity(evolve_linear(psi, 2.0 * kTrev, model), psi) >= 1.0 - 1e-12);
    CHECK(fidelity(evolve_linear(psi, kTrev, model), rotate(psi, pi)) >= 1.0 - 1e-12);
  }
}

TEST_CASE("evolution composes") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> t(0.0, 20.0);
  RingParameters ring;
  ring.omega_perp = 40.0;
  const auto model = corrected_dispersion(ring, 64, {false, true, false});
  const SpectralState psi = gaussian_packet(0.2, 0.2, 64);
  for (int i = 0; i < 20; ++i) {
    const double t1 = t(rng), t2 = t(rng);
    const FluxSpec flux{0.8, t(rng)};
    const SpectralState split = evolve_linear(evolve_linear(psi, t1, model, flux, 0.0), t2, model, flux, t1);
    const SpectralState whole = evolve_linear(psi, t1 + t2, model, flux, 0.0);
    CHECK(max_diff(split, whole) < 1e-10);
  }
}

TEST_CASE("flux rotates the revival") {
  const SpectralState psi = gaussian_packet(0.0, 0.1, 128);
  const auto model = ideal_dispersion(128);
  for (double angle : {0.01, 0.3, 2.0}) {
    const SpectralState out = evolve_linear(psi, kTrev, model, FluxSpec{angle, 0.0});
    CHECK(fidelity(out, rotate(psi, pi + angle)) > 1.0 - 1e-12);
  }
  // A flux quantum turns the packet by a full circle.
  const SpectralState quantum = evolve_linear(psi, kTrev, model, FluxSpec{2.0 * pi, 0.0});
  CHECK(max_diff(quantum, evolve_linear(psi, kTrev, model)) < 1e-12);
  CHECK_THROWS_AS(evolve_linear(psi, -1.0, model), Error);
}

TEST_CASE("split step without interactions matches the linear propagator") {
  RingParameters ring;
  ring.omega_perp = 136.68;
  const int n = 512;
  const auto model = corrected_dispersion(ring, n / 2, {false, true, false});
  const SpectralState psi = harmonic_packet(0.0, ring.transverse_width(), 128);
  GridState g = to_grid(psi, n);
  const SplitStepper stepper(n, model, 0.0);
  const double duration = 0.3;
  stepper.advance(g, duration, 1e-3);
  const SpectralState exact = evolve_linear(psi, duration, model);
  CHECK(max_diff(to_spectral(g, 128), exact) < 1e-8);
}

TEST_CASE("split step conserves the norm") {
  const int n = 512;
  const double g1 = 49.037273128545657;
  const auto model = ideal_dispersion(n / 2);
  GridState psi = to_grid(harmonic_packet(0.0, 0.0855, 128), n);
  const SplitStepper stepper(n, model, g1);
  for (int i = 0; i < 10000; ++i) stepper.step(psi, 2e-4);
  CHECK(std::abs(psi.norm_squared() - 1.0) < 1e-9);
}

TEST_CASE("strang splitting is second order") {
  const int n = 256;
  const double g1 = 40.0;
  const auto model = ideal_dispersion(n / 2);
  GridPotential v(n);
  GridState start(n);
  for (int j = 0; j < n; ++j) {
    v[j] = 30.0 * std::cos(start.angle(j) - 0.4);
    start[j] = std::exp(-std::pow(wrap_angle(start.angle(j)), 2) / 0.08);
  }
  start.normalize();
  const SplitStepper stepper(n, model, g1, v);
  auto run = [&](double dt) {
    GridState s = start;
    stepper.advance(s, 0.02, dt);
    return s;
  };
  const GridState coarse = run(4e-4), mid = run(2e-4), fine = run(1e-4);
  const double ratio = l2_distance(coarse, mid) / l2_distance(mid, fine);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("step size guard") {
  const int n = 128;
  GridState psi = to_grid(gaussian_packet(0.0, 0.1, 60), n);
  const SplitStepper stepper(n, ideal_dispersion(n / 2), 200.0);
  try {
    stepper.step(psi, 0.01);
    FAIL("expected a step-size error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StepSize);
  }
  CHECK_THROWS_AS(SplitStepper(100, ideal_dispersion(50), 0.0), Error);
  CHECK_THROWS_AS(SplitStepper(128, ideal_dispersion(32), 0.0), Error);
}

TEST_CASE("imaginary time ground state") {
  const double w = 136.68384876434746;
  const int n = 512;
  const auto free = ground_state_imaginary_time(w, 0.0, n, 1e-12);
  const GridState gauss = to_grid(harmonic_packet(0.0, 1.0 / std::sqrt(w), 128), n);
  CHECK(l2_distance(free.state, gauss) < 1e-6);
  CHECK(free.energy == doctest::Approx(0.5 * w).epsilon(1e-6));

  const auto interacting = ground_state_imaginary_time(w, 49.037273128545657, n, 1e-12);
  auto second_moment = [](const GridState& g) {
    double s = 0.0;
    for (int j = 0; j < g.points(); ++j) s += std::pow(wrap_angle(g.angle(j)), 2) * std::norm(g[j]);
    return s * g.spacing();
  };
  CHECK(second_moment(interacting.state) > 1.05 * second_moment(free.state));
  CHECK(interacting.energy > free.energy);
  CHECK(interacting.state.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

  try {
    ground_state_imaginary_time(w, 0.0, n, 0.0, 500);
    FAIL("expected a convergence error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Convergence);
  }
}
