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

#include <optional>
#include <vector>

#include "oamring/observables.hpp"
#include "oamring/propagator.hpp"
#include "oamring/spectrum.hpp"

namespace oamring {

enum class Solver { LinearSpectral, SplitStep };

enum class ImprintProfile { Uniform, CosSquared };

struct ImprintSpec {
  double phase_rad = 0.0;
  ImprintProfile profile = ImprintProfile::CosSquared;
  AngularWindow window = kLeftHalf;  // relative to the initial packet at alpha = 0
  double duration_s = 0.0;           // 0 means an instantaneous phase
};

struct RevivalSearch {
  double lo_fraction = 0.97;  // window in units of the ideal revival time
  double hi_fraction = 1.03;
  double resolution_s = 1e-9;
};

struct ProtocolSpec {
  TrapSpec trap;
  InteractionSpec interaction;
  double flux_on_s = 0.0;
  double center_rad = 0.0;
  ImprintSpec imprint;
  double imprint_offset_s = 0.0;
  double readout_offset_s = 0.0;
  Solver solver = Solver::LinearSpectral;
  Corrections corrections;
  int grid_points = 512;
  int cutoff = 128;
  double dt_fraction = 5e-6;  // split-step dt in units of the ideal revival time
  RevivalSearch search;
  std::optional<double> revival_time_s;  // skips the optimisation when set
  Weight readout_weight = Weight::CosSquared;
  AngularWindow right_window = kRightHalf;
  AngularWindow left_window = kLeftHalf;
  int series_samples = 0;  // evenly spaced time series points over the run
  int snapshots = 0;       // full density snapshots over the run
};

struct SeriesPoint {
  double t_s = 0.0;
  double fidelity = 0.0;   // with the revival target
  double imbalance = 0.0;  // NaN when indeterminate
  double centroid_rad = 0.0;  // NaN when undefined
};

struct Snapshot {
  double t_s = 0.0;
  DensityProfile density;
};

struct ProtocolResult {
  SpectralState final_spectral;
  GridState final_grid;
  double imbalance = 0.0;
  double fidelity = 0.0;        // with the pi-rotated (and flux-rotated) initial state
  double revival_time_s = 0.0;  // optimised full revival time
  double centroid_rad = 0.0;    // NaN when the final density is uniform
  double duration_s = 0.0;      // total protocol time
  std::vector<SeriesPoint> series;
  std::vector<Snapshot> snapshots;
};

/// Throws Configuration for inconsistent solver settings.
void validate(const ProtocolSpec& spec);

// Phase pattern phi * f(alpha - origin) on the grid, f being the windowed
// imprint profile.
std::vector<double> imprint_profile(const ProtocolSpec& spec, double phase, double origin = 0.0);
GridState apply_imprint(const ProtocolSpec& spec, const GridState& state, double phase);

/// Initial state of the protocol: the (mean-field) ground state of the loading
/// trap, centred at spec.center_rad.
GridState initial_state(const ProtocolSpec& spec);

/// Maximises |<psi_pi|psi(t)>|^2 over [t_lo, t_hi] (seconds) for the phi = 0
/// protocol: coarse scan with pitch t_d/4, then golden-section refinement.
/// Throws RevivalNotFound when no point exceeds fidelity 0.1.
double find_revival_time(const ProtocolSpec& spec, double t_lo_s, double t_hi_s,
                         double resolution_s);

/// Same, with the window and resolution taken from spec.search.
double find_revival_time(const ProtocolSpec& spec);

/// prepare -> evolve T/2 -> imprint -> evolve T/2 -> measure.
ProtocolResult run_protocol(const ProtocolSpec& spec);

struct PhasePoint {
  double phi_rad = 0.0;
  double imbalance = 0.0;
};

/// One protocol run per phase, distributed over `threads` workers. The revival
/// time is optimised once and shared. Output is in input order.
std::vector<PhasePoint> sweep_phase(const ProtocolSpec& spec, const std::vector<double>& phis,
                                    int threads = 1);

struct TimingPoint {
  double offset_s = 0.0;
  double fidelity = 0.0;
  double imbalance = 0.0;
};

/// Re-runs the protocol with imprint and readout both delayed by each offset.
std::vector<TimingPoint> timing_sensitivity(const ProtocolSpec& spec,
                                            const std::vector<double>& offsets_s,
                                            int threads = 1);

}  // namespace oamring
