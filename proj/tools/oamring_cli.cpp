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

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "oamring/oamring.h"

namespace {

int exit_code(oam_status s) {
  switch (s) {
    case OAM_OK: return 0;
    case OAM_ERR_CONFIG:
    case OAM_ERR_INVALID_ARGUMENT: return 2;
    default: return 1;
  }
}

int report(oam_status s) {
  if (s != OAM_OK) std::fprintf(stderr, "oamring: error: %s\n", oam_last_error());
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbital-angular-momentum interference in ring traps"};
  app.set_version_flag("--version", std::string(oam_version()));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  int threads = 1;
  int snapshots = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "scenario file (key = value)")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  };

  auto* revival = app.add_subcommand("revival", "optimise the revival time and write the protocol time series");
  add_common(revival);
  revival->add_option("--snapshots", snapshots, "number of density snapshots")->check(CLI::NonNegativeNumber);
  auto* sweep = app.add_subcommand("sweep-phase", "population imbalance versus imprinted phase");
  add_common(sweep);
  auto* spectrum = app.add_subcommand("spectrum", "dispersion relation with perturbative corrections");
  add_common(spectrum);
  auto* sense = app.add_subcommand("sense", "gauge-flux and phase sensitivity figures");
  add_common(sense);
  auto* timing = app.add_subcommand("timing", "protocol degradation under imprint/readout mistiming");
  add_common(timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  oam_scenario* scenario = nullptr;
  if (oam_status s = oam_scenario_load(config_path.c_str(), &scenario); s != OAM_OK) return report(s);

  oam_run_options opts{out_dir.c_str(), threads, snapshots, stdout};
  oam_status s = OAM_OK;
  if (*revival) {
    double trev = 0.0;
    s = oam_run_revival(scenario, &opts, &trev);
  } else if (*sweep) {
    s = oam_run_sweep_phase(scenario, &opts);
  } else if (*spectrum) {
    s = oam_run_spectrum(scenario, &opts);
  } else if (*sense) {
    s = oam_run_sense(scenario, &opts);
  } else if (*timing) {
    s = oam_run_timing(scenario, &opts);
  }
  oam_scenario_free(scenario);
  return report(s);
}
