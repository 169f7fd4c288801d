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
#include <cstring>
#include <string>

#include "doctest.h"
#include "oamring/oamring.h"

TEST_CASE("revival time through the C interface") {
  double t = 0.0;
  REQUIRE(oam_revival_time(38.96370668 * 1.66053906660e-27, 5.9e-6, &t) == OAM_OK);
  CHECK(t == doctest::Approx(0.13418905473201637).epsilon(1e-12));
  CHECK(oam_revival_time(1e-25, -1.0, &t) == OAM_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(oam_last_error()) > 0);
  CHECK(oam_revival_time(1e-25, 1e-6, nullptr) == OAM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("state handles") {
  oam_state* psi = nullptr;
  REQUIRE(oam_state_gaussian(0.0, 0.1, 64, &psi) == OAM_OK);
  CHECK(oam_state_cutoff(psi) == 64);
  oam_state* copy = nullptr;
  REQUIRE(oam_state_clone(psi, &copy) == OAM_OK);

  REQUIRE(oam_state_evolve(psi, 2.0 * M_PI, 0.3) == OAM_OK);
  REQUIRE(oam_state_rotate(copy, M_PI + 0.3) == OAM_OK);
  double f = 0.0;
  REQUIRE(oam_state_fidelity(psi, copy, &f) == OAM_OK);
  CHECK(f > 1.0 - 1e-12);
  double c = 0.0;
  REQUIRE(oam_state_centroid(psi, &c) == OAM_OK);
  CHECK(std::remainder(c - (M_PI + 0.3), 2.0 * M_PI) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));

  double re = 0.0, im = 0.0;
  CHECK(oam_state_amplitude(psi, 65, &re, &im) == OAM_ERR_INVALID_ARGUMENT);
  REQUIRE(oam_state_amplitude(psi, 0, &re, &im) == OAM_OK);
  CHECK(std::hypot(re, im) > 0.0);
  CHECK(oam_state_gaussian(0.0, 0.1, 8, &copy) == OAM_ERR_INVALID_ARGUMENT);
  oam_state_free(psi);
  oam_state_free(copy);
  oam_state_free(nullptr);
}

TEST_CASE("scenario handles") {
  oam_scenario* s = nullptr;
  CHECK(oam_scenario_parse("mass_u = 39\nbogus = 1\n", &s) == OAM_ERR_CONFIG);
  CHECK(std::string(oam_last_error()).find("bogus") != std::string::npos);
  REQUIRE(oam_scenario_parse("mass_u = 39\nradius_um = 5.9\nomega_perp_krad_s = 6.4\n", &s) == OAM_OK);
  char buf[64];
  REQUIRE(oam_scenario_get(s, "grid_points", buf, sizeof buf) == OAM_OK);
  CHECK(std::string(buf) == "512");
  unsigned long long h1 = 0, h2 = 0;
  REQUIRE(oam_scenario_hash(s, &h1) == OAM_OK);
  REQUIRE(oam_scenario_set(s, "atom_number", "1000") == OAM_OK);
  REQUIRE(oam_scenario_hash(s, &h2) == OAM_OK);
  CHECK(h1 != h2);
  CHECK(oam_scenario_set(s, "nope", "1") == OAM_ERR_CONFIG);
  CHECK(oam_scenario_load("/nonexistent.cfg", &s) != OAM_OK);
  oam_scenario_free(s);
  CHECK(std::string(oam_version()).size() > 0);
}
