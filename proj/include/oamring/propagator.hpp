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

#include <functional>
#include <optional>
#include <vector>

#include "oamring/fft.hpp"
#include "oamring/ring_state.hpp"
#include "oamring/spectrum.hpp"

namespace oamring {

/// Gauge flux in the symmetric gauge. All quantities are internal units.
struct FluxSpec {
  double angle = 0.0;    // gamma Phi / hbar, the rotation per ideal revival
  double turn_on = 0.0;  // flux active from this time onward
};

/// Mean-field coupling reduced to the ring.
struct InteractionSpec {
  double scattering_length_m = 0.0;
  double atom_number = 0.0;

  /// g1 = 2 hbar omega_perp a N in J m.
  double coupling_si(const TrapSpec& trap) const;
  /// g1 in units of hbar^2/(m R), i.e. the prefactor of |psi(alpha)|^2 in
  /// the dimensionless equation.
  double coupling_internal(const TrapSpec& trap) const;
  bool attractive() const noexcept { return scattering_length_m < 0.0; }
};

/// Exact evolution from t0 to t0 + duration, diagonal in l:
/// c_l -> exp(-i E(l) t) exp(-i flux (t_active / 2 pi) l) c_l.
/// The flux term rotates the density by +flux.angle per ideal revival time.
SpectralState evolve_linear(const SpectralState& state, double duration,
                            const DispersionModel& model,
                            const std::optional<FluxSpec>& flux = std::nullopt,
                            double t0 = 0.0);

/// Evolution for half the ideal revival time. Equals
/// e^{-i pi/4} (1 + i e^{i pi L_z}) / sqrt(2) applied to the input.
SpectralState half_revival_superposition(const SpectralState& state);

/// Local potential V(alpha_j) on the grid.
using GridPotential = std::vector<double>;

/// Strang split-step integrator on a fixed grid:
/// half local step, exact kinetic step, half local step. The local term is
/// V(alpha) + g |psi|^2 (internal units, g = g1 m R / hbar^2).
class SplitStepper {
 public:
  /// `angular_drift` adds drift * l to the kinetic energies; a flux angle
  /// theta corresponds to drift theta / (2 pi).
  SplitStepper(int points, const DispersionModel& model, double coupling,
               GridPotential potential = {}, double angular_drift = 0.0);

  int points() const noexcept { return points_; }
  double coupling() const noexcept { return coupling_; }

  /// Real-time step. Throws StepSize when the local phase increment would
  /// reach 0.1 rad.
  void step(GridState& state, double dt) const;

  /// Advance by `duration` using steps of at most `dt`; the final step is
  /// shortened to land exactly on the end time. Returns the number of steps.
  long advance(GridState& state, double duration, double dt) const;

  /// Imaginary-time step (no renormalisation).
  void step_imaginary(GridState& state, double dtau) const;

  /// Mean-field energy functional.
  double energy(const GridState& state) const;

  void set_potential(GridPotential potential);
  const GridPotential& potential() const noexcept { return potential_; }

 private:
  void local_phase(GridState& state, double dt) const;

  int points_;
  double coupling_;
  GridPotential potential_;
  std::vector<double> kinetic_;  // E(l) in FFT order
  const FftPlan* fft_;
  mutable std::vector<cplx> work_;
  mutable double cached_dt_ = 0.0;
  mutable std::vector<cplx> kinetic_phase_;
};

/// One Strang step; convenience wrapper over SplitStepper.
GridState step_nonlinear(const GridState& state, double dt, const DispersionModel& model,
                         double coupling, const GridPotential& potential = {});

struct GroundStateResult {
  GridState state;
  double energy = 0.0;
  long steps = 0;
};

/// Lowest state of -(1/2) d^2/dalpha^2 + (omega^2/2) alpha^2 + g |psi|^2 with
/// alpha wrapped into (-pi, pi], by normalised imaginary-time split stepping.
/// Converged when the energy change per step drops below `tolerance` on the
/// finest step size. Throws Convergence when the step budget is spent.
GroundStateResult ground_state_imaginary_time(double well_frequency, double coupling,
                                              int points, double tolerance,
                                              long max_steps = 2'000'000);

}  // namespace oamring
