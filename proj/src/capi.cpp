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

#include "oamring/oamring.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "oamring/commands.hpp"
#include "oamring/error.hpp"
#include "oamring/observables.hpp"
#include "oamring/propagator.hpp"
#include "oamring/ring_state.hpp"
#include "oamring/scenario.hpp"

struct oam_scenario {
  oamring::ScenarioConfig config;
};

struct oam_state {
  oamring::SpectralState state;
};

namespace {

thread_local std::string last_error;

oam_status status_of(oamring::ErrorCode code) {
  using oamring::ErrorCode;
  switch (code) {
    case ErrorCode::Configuration: return OAM_ERR_CONFIG;
    case ErrorCode::Io: return OAM_ERR_IO;
    case ErrorCode::InvalidParameter:
    case ErrorCode::CutoffInsufficient:
    case ErrorCode::NotApplicable: return OAM_ERR_INVALID_ARGUMENT;
    default: return OAM_ERR_RUNTIME;
  }
}

template <class F>
oam_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    f();
    return OAM_OK;
  } catch (const oamring::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OAM_ERR_RUNTIME;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OAM_ERR_RUNTIME;
  }
}

oamring::RunOptions options_of(const oam_run_options* o) {
  oamring::RunOptions r;
  if (!o) return r;
  if (o->out_dir) r.out_dir = o->out_dir;
  r.threads = o->threads > 0 ? o->threads : 1;
  r.snapshots = o->snapshots > 0 ? o->snapshots : 0;
  r.log = o->log;
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) oamring::fail(oamring::ErrorCode::InvalidParameter, what);
}

}  // namespace

extern "C" {

const char* oam_version(void) { return "0.1.0"; }

const char* oam_last_error(void) { return last_error.c_str(); }

oam_status oam_scenario_load(const char* path, oam_scenario** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new oam_scenario{oamring::ScenarioConfig::load(path)};
  });
}

oam_status oam_scenario_parse(const char* text, oam_scenario** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new oam_scenario{oamring::ScenarioConfig::parse(text)};
  });
}

oam_status oam_scenario_set(oam_scenario* scenario, const char* key, const char* value) {
  return guarded([&] {
    require(scenario && key && value, "null argument");
    scenario->config.set(key, value);
  });
}

oam_status oam_scenario_get(const oam_scenario* scenario, const char* key, char* buf, size_t len) {
  return guarded([&] {
    require(scenario && key && buf && len > 0, "null argument");
    const std::string v = scenario->config.get(key);
    require(v.size() < len, "buffer too small");
    std::memcpy(buf, v.c_str(), v.size() + 1);
  });
}

oam_status oam_scenario_hash(const oam_scenario* scenario, unsigned long long* out) {
  return guarded([&] {
    require(scenario && out, "null argument");
    *out = scenario->config.hash();
  });
}

void oam_scenario_free(oam_scenario* scenario) { delete scenario; }

oam_status oam_run_revival(const oam_scenario* scenario, const oam_run_options* options,
                           double* revival_time_s) {
  return guarded([&] {
    require(scenario, "null scenario");
    const double t = oamring::run_revival_command(scenario->config, options_of(options));
    if (revival_time_s) *revival_time_s = t;
  });
}

oam_status oam_run_sweep_phase(const oam_scenario* scenario, const oam_run_options* options) {
  return guarded([&] {
    require(scenario, "null scenario");
    oamring::run_sweep_phase_command(scenario->config, options_of(options));
  });
}

oam_status oam_run_spectrum(const oam_scenario* scenario, const oam_run_options* options) {
  return guarded([&] {
    require(scenario, "null scenario");
    oamring::run_spectrum_command(scenario->config, options_of(options));
  });
}

oam_status oam_run_sense(const oam_scenario* scenario, const oam_run_options* options) {
  return guarded([&] {
    require(scenario, "null scenario");
    oamring::run_sense_command(scenario->config, options_of(options));
  });
}

oam_status oam_run_timing(const oam_scenario* scenario, const oam_run_options* options) {
  return guarded([&] {
    require(scenario, "null scenario");
    oamring::run_timing_command(scenario->config, options_of(options));
  });
}

oam_status oam_revival_time(double mass_kg, double radius_m, double* seconds) {
  return guarded([&] {
    require(seconds != nullptr, "null argument");
    oamring::TrapSpec trap;
    trap.mass_kg = mass_kg;
    trap.radius_m = radius_m;
    *seconds = oamring::revival_time(trap);
  });
}

oam_status oam_state_gaussian(double center, double width, int cutoff, oam_state** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new oam_state{oamring::gaussian_packet(center, width, cutoff)};
  });
}

oam_status oam_state_clone(const oam_state* state, oam_state** out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = new oam_state{state->state};
  });
}

void oam_state_free(oam_state* state) { delete state; }

int oam_state_cutoff(const oam_state* state) { return state ? state->state.cutoff() : -1; }

oam_status oam_state_amplitude(const oam_state* state, int l, double* re, double* im) {
  return guarded([&] {
    require(state && re && im, "null argument");
    require(l >= -state->state.cutoff() && l <= state->state.cutoff(), "l outside the cutoff");
    const auto c = state->state[l];
    *re = c.real();
    *im = c.imag();
  });
}

oam_status oam_state_evolve(oam_state* state, double duration, double flux_angle) {
  return guarded([&] {
    require(state != nullptr, "null argument");
    std::optional<oamring::FluxSpec> flux;
    if (flux_angle != 0.0) flux = oamring::FluxSpec{flux_angle, 0.0};
    state->state = oamring::evolve_linear(state->state, duration,
                                          oamring::ideal_dispersion(state->state.cutoff()), flux);
  });
}

oam_status oam_state_rotate(oam_state* state, double angle) {
  return guarded([&] {
    require(state != nullptr, "null argument");
    state->state = oamring::rotate(state->state, angle);
  });
}

oam_status oam_state_fidelity(const oam_state* a, const oam_state* b, double* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = oamring::fidelity(a->state, b->state);
  });
}

oam_status oam_state_centroid(const oam_state* state, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = oamring::circular_centroid(state->state);
  });
}

}  // extern "C"
