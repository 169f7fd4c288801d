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

GridState random_grid(std::mt19937_64& rng, int points) {
  std::normal_distribution<double> n(0.0, 1.0);
  SpectralState s(points / 2 - 1);
  for (int l = -8; l <= 8; ++l) s[l] = {n(rng), n(rng)};
  GridState g = to_grid(s, points);
  g.normalize();
  return g;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("fidelity basics") {
  const SpectralState a = gaussian_packet(0.0, 0.0856, 128);
  CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-15));
  const SpectralState b = rotate(a, pi);
  // Overlap of Gaussians exp(-a^2/w^2) a distance pi apart: exp(-pi^2 / (2 w^2)).
  CHECK(fidelity(a, b) < 1e-10);
  CHECK(std::exp(-pi * pi / (2.0 * 0.0856 * 0.0856)) < 1e-10);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const GridState x = random_grid(rng, 64), y = random_grid(rng, 64);
    CHECK(fidelity(x, y) == doctest::Approx(fidelity(y, x)).epsilon(1e-14));
    CHECK(fidelity(x, y) >= 0.0);
    CHECK(fidelity(x, y) <= 1.0);
    GridState xp = x;
    for (auto& v : xp.samples()) v *= std::polar(1.0, 0.77);
    CHECK(fidelity(xp, y) == doctest::Approx(fidelity(x, y)).epsilon(1e-12));
    CHECK(fidelity(rotate(x, 1.3), rotate(y, 1.3)) == doctest::Approx(fidelity(x, y)).epsilon(1e-12));
  }
  CHECK(code_of([] { fidelity(GridState(8), GridState(16)); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { fidelity(SpectralState(3), SpectralState(4)); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("imbalance examples") {
  GridState uniform(256);
  for (auto& v : uniform.samples()) v = 1.0;
  uniform.normalize();
  CHECK(population_imbalance(uniform).value == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(population_imbalance(uniform, Weight::Uniform).value ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

  const GridState right = to_grid(gaussian_packet(0.0, 0.08, 128), 512);
  CHECK(population_imbalance(right).value == doctest::Approx(1.0).epsilon(1e-12));
  const GridState left = to_grid(gaussian_packet(pi, 0.08, 128), 512);
  CHECK(population_imbalance(left).value == doctest::Approx(-1.0).epsilon(1e-12));

  // cos(phi/2)|psi_pi> + i sin(phi/2)|psi_0> at phi = pi/2.
  const SpectralState p0 = gaussian_packet(0.0, 0.0856, 128);
  SpectralState mix(128);
  const double phi = pi / 2.0;
  const SpectralState ppi = rotate(p0, pi);
  for (int l = -128; l <= 128; ++l) mix[l] = std::cos(phi / 2) * ppi[l] + cplx(0, std::sin(phi / 2)) * p0[l];
  CHECK(std::abs(population_imbalance(to_grid(mix, 512)).value) < 1e-12);

  GridState empty(64);
  CHECK(code_of([&] { population_imbalance(empty); }) == ErrorCode::IndeterminateImbalance);
  CHECK(code_of([&] { population_imbalance(uniform, Weight::Uniform, {0.0, 2.0}, {1.0, 3.0}); }) ==
        ErrorCode::InvalidParameter);
}

TEST_CASE("imbalance bounds and mirror symmetry") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const GridState g = random_grid(rng, 128);
    for (Weight w : {Weight::Uniform, Weight::CosSquared}) {
      const double v = population_imbalance(g, w).value;
      CHECK(v >= -1.0);
      CHECK(v <= 1.0);
      // Reflecting through the window boundary a -> pi - a swaps the halves.
      GridState mirrored(g.points());
      const int n = g.points();
      for (int j = 0; j < n; ++j) mirrored[j] = g[((n / 2 - j) % n + n) % n];
      CHECK(population_imbalance(mirrored, w).value == doctest::Approx(-v).epsilon(1e-12).scale(1.0));
      GridState sym(g.points());
      for (int j = 0; j < n; ++j) sym[j] = std::sqrt(0.5 * (std::norm(g[j]) + std::norm(mirrored[j])));
      CHECK(std::abs(population_imbalance(sym, w).value) < 1e-12);
    }
  }
}

TEST_CASE("snap distance stays below one grid spacing") {
  const GridState g = to_grid(gaussian_packet(0.0, 0.3, 60), 128);
  const auto imb = population_imbalance(g, Weight::Uniform, {-1.0, 1.0}, {2.0, 4.0});
  CHECK(imb.snap_distance > 0.0);
  CHECK(imb.snap_distance <= g.spacing());
}

TEST_CASE("centroid examples") {
  const SpectralState p0 = gaussian_packet(0.0, 0.0856, 128);
  CHECK(std::abs(circular_centroid(p0)) < 1e-14);
  CHECK(std::abs(circular_centroid(to_grid(p0, 512))) < 1e-14);

  const SpectralState out = evolve_linear(p0, kIdealRevivalTime, ideal_dispersion(128), FluxSpec{0.3, 0.0});
  CHECK(std::abs(wrap_angle(circular_centroid(out) - (pi + 0.3))) < 1e-8);
  CHECK(std::abs(wrap_angle(circular_centroid(to_grid(out, 512)) - (pi + 0.3))) < 1e-8);

  SpectralState flat(16);
  flat[0] = 1.0;
  CHECK(code_of([&] { circular_centroid(flat); }) == ErrorCode::CentroidUndefined);
  CHECK(code_of([&] { circular_centroid(to_grid(flat, 64)); }) == ErrorCode::CentroidUndefined);
}

TEST_CASE("centroid is rotation equivariant") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(-20.0, 20.0);
  for (int i = 0; i < 50; ++i) {
    const GridState g = random_grid(rng, 128);
    const double theta = angle(rng);
    const double before = circular_centroid(g);
    CHECK(std::abs(wrap_angle(circular_centroid(rotate(g, theta)) - before - theta)) < 1e-12);
    const SpectralState s = to_spectral(g, 63);
    CHECK(std::abs(wrap_angle(circular_centroid(s) - before)) < 1e-12);
    CHECK(std::abs(wrap_angle(circular_centroid(rotate(s, theta)) - before - theta)) < 1e-12);
  }
}
