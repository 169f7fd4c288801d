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

#ifndef OAMRING_OAMRING_H
#define OAMRING_OAMRING_H

/* C interface of the oamring library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Functions return
 * an oam_status; on failure oam_last_error() describes the problem (the
 * message is thread-local and valid until the next call on the same thread). */

#include <stddef.h>
#include <stdio.h>

#if defined(_WIN32)
#  define OAM_API __declspec(dllexport)
#else
#  define OAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oam_status {
  OAM_OK = 0,
  OAM_ERR_RUNTIME = 1,          /* physics or numerical failure */
  OAM_ERR_CONFIG = 2,           /* invalid or incomplete configuration */
  OAM_ERR_IO = 3,               /* unreadable or unwritable file */
  OAM_ERR_INVALID_ARGUMENT = 4  /* bad argument to an API call */
} oam_status;

typedef struct oam_scenario oam_scenario;
typedef struct oam_state oam_state;

typedef struct oam_run_options {
  const char* out_dir; /* NULL means "." */
  int threads;         /* <= 0 means 1 */
  int snapshots;       /* density snapshots for the revival command */
  FILE* log;           /* progress and tables; NULL silences output */
} oam_run_options;

OAM_API const char* oam_version(void);
OAM_API const char* oam_last_error(void);

/* Scenario configuration ("key = value" text with unit-suffixed keys). */
OAM_API oam_status oam_scenario_load(const char* path, oam_scenario** out);
OAM_API oam_status oam_scenario_parse(const char* text, oam_scenario** out);
OAM_API oam_status oam_scenario_set(oam_scenario* scenario, const char* key, const char* value);
/* Copies the effective value (explicit or default) into buf. */
OAM_API oam_status oam_scenario_get(const oam_scenario* scenario, const char* key, char* buf,
                                    size_t len);
OAM_API oam_status oam_scenario_hash(const oam_scenario* scenario, unsigned long long* out);
OAM_API void oam_scenario_free(oam_scenario* scenario);

/* Subcommands. Each writes CSV files into options->out_dir. */
OAM_API oam_status oam_run_revival(const oam_scenario* scenario, const oam_run_options* options,
                                   double* revival_time_s);
OAM_API oam_status oam_run_sweep_phase(const oam_scenario* scenario, const oam_run_options* options);
OAM_API oam_status oam_run_spectrum(const oam_scenario* scenario, const oam_run_options* options);
OAM_API oam_status oam_run_sense(const oam_scenario* scenario, const oam_run_options* options);
OAM_API oam_status oam_run_timing(const oam_scenario* scenario, const oam_run_options* options);

/* Closed-form helpers (SI). */
OAM_API oam_status oam_revival_time(double mass_kg, double radius_m, double* seconds);

/* Ring states in the angular-momentum basis, internal units (hbar = m = R = 1,
 * ideal revival time 2 pi). */
OAM_API oam_status oam_state_gaussian(double center, double width, int cutoff, oam_state** out);
OAM_API oam_status oam_state_clone(const oam_state* state, oam_state** out);
OAM_API void oam_state_free(oam_state* state);
OAM_API int oam_state_cutoff(const oam_state* state);
/* Amplitude c_l as (re, im). */
OAM_API oam_status oam_state_amplitude(const oam_state* state, int l, double* re, double* im);
/* Exact ideal-ring evolution with an optional flux angle gamma Phi / hbar. */
OAM_API oam_status oam_state_evolve(oam_state* state, double duration, double flux_angle);
OAM_API oam_status oam_state_rotate(oam_state* state, double angle);
OAM_API oam_status oam_state_fidelity(const oam_state* a, const oam_state* b, double* out);
OAM_API oam_status oam_state_centroid(const oam_state* state, double* out);

#ifdef __cplusplus
}
#endif

#endif /* OAMRING_OAMRING_H */
