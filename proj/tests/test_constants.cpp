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
#include <random>

#include "doctest.h"
#include "oamring/constants.hpp"
#include "oamring/error.hpp"
#include "oamring/trap.hpp"

using namespace oamring;

TEST_CASE("potassium ring time unit") {
  const UnitSystem u(k39::mass_kg, k39::radius_m);
  // m R^2 / hbar evaluated by hand with CODATA 2018 values.
  CHECK(u.time_unit() == doctest::Approx(0.021356851369429292).epsilon(1e-12));
  CHECK(2.0 * M_PI * u.time_unit() == doctest::Approx(0.13418905473201637).epsilon(1e-12));
  CHECK(u.energy_unit() * u.time_unit() == doctest::Approx(PhysicalConstants::hbar).epsilon(1e-14));
}

TEST_CASE("round trips are exact to rounding") {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> mass(1e-27, 1e-24), radius(1e-7, 1e-3), x(-1e3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const UnitSystem u(mass(rng), radius(rng));
    const double v = x(rng);
    CHECK(u.time_to_internal(u.time_to_si(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(u.energy_to_internal(u.energy_to_si(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(u.length_to_internal(u.length_to_si(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(u.frequency_to_internal(u.frequency_to_si(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(u.action_to_internal(u.action_to_si(v)) == doctest::Approx(v).epsilon(1e-14));
  }
}

TEST_CASE("unit scales leave everything at one") {
  const UnitSystem u(1.0, 1.0, 1.0);
  CHECK(u.time_unit() == 1.0);
  CHECK(u.energy_unit() == 1.0);
  CHECK(u.length_unit() == 1.0);
  CHECK(u.time_to_internal(3.5) == 3.5);
}

TEST_CASE("non-physical inputs are rejected") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of([] { UnitSystem(k39::mass_kg, 0.0); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { UnitSystem(-1.0, 1e-6); }) == ErrorCode::InvalidParameter);
  TrapSpec trap;
  trap.omega_perp_rad_s = 0.0;
  CHECK(code_of([&] { validate(trap); }) == ErrorCode::InvalidParameter);
  trap = TrapSpec{};
  trap.eccentricity = 1.0;
  CHECK(code_of([&] { validate(trap); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("dimensionless ring parameters") {
  TrapSpec trap;
  const RingParameters ring = to_internal(trap);
  CHECK(ring.omega_perp == doctest::Approx(136.68384876434746).epsilon(1e-12));
  CHECK(ring.transverse_width() == doctest::Approx(0.085534515632148062).epsilon(1e-12));
  CHECK(trap.transverse_width_m() / trap.radius_m == doctest::Approx(ring.transverse_width()).epsilon(1e-14));
  CHECK(perturbative_warnings(ring).empty());
  RingParameters wide;
  wide.omega_perp = 4.0;
  wide.eccentricity = 0.6;
  CHECK(perturbative_warnings(wide).size() == 2);
}
