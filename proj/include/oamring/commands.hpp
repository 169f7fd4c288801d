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

#include <cstdio>
#include <string>

#include "oamring/scenario.hpp"

namespace oamring {

struct RunOptions {
  std::string out_dir = ".";
  int threads = 1;
  int snapshots = 0;
  std::FILE* log = stdout;
};

/// Writes revival_timeseries.csv (and density_snapshots.csv when snapshots > 0).
/// Returns the optimised revival time in seconds.
double run_revival_command(const ScenarioConfig& cfg, const RunOptions& opt);
/// Writes sweep_phase_<variant>.csv for each configured variant.
void run_sweep_phase_command(const ScenarioConfig& cfg, const RunOptions& opt);
/// Writes spectrum.csv.
void run_spectrum_command(const ScenarioConfig& cfg, const RunOptions& opt);
/// Writes sense.csv and prints the same table to the log.
void run_sense_command(const ScenarioConfig& cfg, const RunOptions& opt);
/// Writes timing.csv.
void run_timing_command(const ScenarioConfig& cfg, const RunOptions& opt);

/// The phase grid of the sweep: the explicit list when given, otherwise
/// sweep_phi_count points over [0, 2 pi]; sorted ascending.
std::vector<double> sweep_phases(const ScenarioConfig& cfg);

}  // namespace oamring
