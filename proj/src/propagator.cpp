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

#include "oamring/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oamring/error.hpp"

namespace oamring {

using std::numbers::pi;

double InteractionSpec::coupling_si(const TrapSpec& trap) const {
  return 2.0 * PhysicalConstants::hbar * trap.omega_perp_rad_s * scattering_length_m *
         atom_number;
}

double InteractionSpec::coupling_internal(const TrapSpec& trap) const {
  const double unit = PhysicalConstants::hbar * PhysicalConstants::hbar /
                      (trap.mass_kg * trap.radius_m);
  return coupling_si(trap) / unit;
}

SpectralState evolve_linear(const SpectralState& state, double duration,
                            const DispersionModel& model, const std::optional<FluxSpec>& flux,
                            double t0) {
  if (duration < 0.0) fail(ErrorCode::InvalidParameter, "duration must be non-negative");
  if (model.cutoff() < state.cutoff())
    fail(ErrorCode::InvalidParameter, "dispersion cutoff below state cutoff");
  double drift = 0.0;
  if (flux) {
    const double active = std::max(0.0, t0 + duration - std::max(t0, flux->turn_on));
    drift = flux->angle * active / kIdealRevivalTime;
  }
  SpectralState out = state;
  for (int l = -state.cutoff(); l <= state.cutoff(); ++l) {
    const double phase = std::fmod(model(l) * duration, 2.0 * pi) + std::fmod(drift * l, 2.0 * pi);
    out[l] *= std::polar(1.0, -phase);
  }
  return out;
}

SpectralState half_revival_superposition(const SpectralState& state) {
  return evolve_linear(state, 0.5 * kIdealRevivalTime, ideal_dispersion(state.cutoff()));
}

SplitStepper::SplitStepper(int points, const DispersionModel& model, double coupling,
                           GridPotential potential, double angular_drift)
    : points_(points),
      coupling_(coupling),
      potential_(std::move(potential)),
      kinetic_(static_cast<std::size_t>(points)),
      fft_(&FftPlan::get(points)),
      work_(static_cast<std::size_t>(points)) {
  if (!is_power_of_two(points)) fail(ErrorCode::InvalidParameter, "grid size must be a power of two");
  if (model.cutoff() < points / 2)
    fail(ErrorCode::InvalidParameter, "dispersion cutoff must cover all grid modes (>= N/2)");
  if (!potential_.empty() && potential_.size() != static_cast<std::size_t>(points))
    fail(ErrorCode::InvalidParameter, "potential size does not match the grid");
  for (int k = 0; k < points; ++k) {
    const int l = k < points / 2 ? k : k - points;
    kinetic_[static_cast<std::size_t>(k)] = model(l) + angular_drift * l;
  }
}

void SplitStepper::set_potential(GridPotential potential) {
  if (!potential.empty() && potential.size() != static_cast<std::size_t>(points_))
    fail(ErrorCode::InvalidParameter, "potential size does not match the grid");
  potential_ = std::move(potential);
}

void SplitStepper::local_phase(GridState& state, double dt) const {
  auto psi = state.samples();
  const bool has_v = !potential_.empty();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double v = (has_v ? potential_[j] : 0.0) + coupling_ * std::norm(psi[j]);
    psi[j] *= std::polar(1.0, -v * dt);
  }
}

void SplitStepper::step(GridState& state, double dt) const {
  if (!(dt > 0.0)) fail(ErrorCode::StepSize, "time step must be positive");
  if (state.points() != points_) fail(ErrorCode::InvalidParameter, "grid size mismatch");
  double vmax = 0.0;
  const bool has_v = !potential_.empty();
  auto psi = state.samples();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double v = (has_v ? potential_[j] : 0.0) + coupling_ * std::norm(psi[j]);
    vmax = std::max(vmax, std::abs(v));
  }
  if (vmax * dt >= 0.1) {
    std::ostringstream os;
    os << "local phase increment " << vmax * dt << " rad per step exceeds 0.1; reduce dt";
    fail(ErrorCode::StepSize, os.str());
  }

  local_phase(state, 0.5 * dt);
  if (dt != cached_dt_) {
    kinetic_phase_.resize(kinetic_.size());
    for (std::size_t k = 0; k < kinetic_.size(); ++k)
      kinetic_phase_[k] = std::polar(1.0 / points_, -std::fmod(kinetic_[k] * dt, 2.0 * pi));
    cached_dt_ = dt;
  }
  fft_->forward(psi, work_);
  for (std::size_t k = 0; k < work_.size(); ++k) work_[k] *= kinetic_phase_[k];
  fft_->backward(work_, psi);
  local_phase(state, 0.5 * dt);
}

long SplitStepper::advance(GridState& state, double duration, double dt) const {
  if (duration < 0.0) fail(ErrorCode::InvalidParameter, "duration must be non-negative");
  if (duration == 0.0) return 0;
  const double count = std::ceil(duration / dt - 1e-9);
  const long full = static_cast<long>(count) - 1;
  for (long i = 0; i < full; ++i) step(state, dt);
  const double rest = duration - static_cast<double>(full) * dt;
  if (rest > 0.0) step(state, rest);
  return full + 1;
}

void SplitStepper::step_imaginary(GridState& state, double dtau) const {
  auto psi = state.samples();
  const bool has_v = !potential_.empty();
  auto local = [&] {
    for (std::size_t j = 0; j < psi.size(); ++j) {
      const double v = (has_v ? potential_[j] : 0.0) + coupling_ * std::norm(psi[j]);
      psi[j] *= std::exp(-0.5 * v * dtau);
    }
  };
  local();
  fft_->forward(psi, work_);
  for (std::size_t k = 0; k < work_.size(); ++k) work_[k] *= std::exp(-kinetic_[k] * dtau) / points_;
  fft_->backward(work_, psi);
  local();
}

double SplitStepper::energy(const GridState& state) const {
  const auto psi = state.samples();
  fft_->forward(psi, work_);
  const double dalpha = 2.0 * pi / points_;
  // sum_l E(l) |c_l|^2 with c_l = sqrt(2 pi)/N * FFT
  double kin = 0.0;
  for (std::size_t k = 0; k < work_.size(); ++k) kin += kinetic_[k] * std::norm(work_[k]);
  kin *= 2.0 * pi / (static_cast<double>(points_) * points_);
  double local = 0.0;
  const bool has_v = !potential_.empty();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double n = std::norm(psi[j]);
    local += ((has_v ? potential_[j] : 0.0) + 0.5 * coupling_ * n) * n;
  }
  return kin + local * dalpha;
}

GridState step_nonlinear(const GridState& state, double dt, const DispersionModel& model,
                         double coupling, const GridPotential& potential) {
  SplitStepper stepper(state.points(), model, coupling, potential);
  GridState out = state;
  stepper.step(out, dt);
  return out;
}

GroundStateResult ground_state_imaginary_time(double well_frequency, double coupling, int points,
                                              double tolerance, long max_steps) {
  if (!(well_frequency > 0.0)) fail(ErrorCode::InvalidParameter, "well frequency must be positive");
  if (!(tolerance >= 0.0)) fail(ErrorCode::InvalidParameter, "tolerance must be non-negative");
  GridPotential well(static_cast<std::size_t>(points));
  GridState psi(points);
  for (int j = 0; j < points; ++j) {
    const double d = wrap_angle(psi.angle(j));
    well[static_cast<std::size_t>(j)] = 0.5 * well_frequency * well_frequency * d * d;
    psi[j] = std::exp(-0.5 * well_frequency * d * d);
  }
  psi.normalize();
  SplitStepper stepper(points, ideal_dispersion(points / 2), coupling, std::move(well));

  // Step size is refined in stages; the Strang error of the fixed point scales
  // with dtau^2, so only the last stage has to meet the tolerance.
  static constexpr double kStages[] = {0.05, 0.0125, 0.003125, 0.00078125};
  long steps = 0;
  double energy = stepper.energy(psi);
  for (double scaled : kStages) {
    const double dtau = scaled / well_frequency;
    while (true) {
      if (steps >= max_steps) {
        std::ostringstream os;
        os << "imaginary-time propagation did not converge to " << tolerance << " within "
           << max_steps << " steps";
        fail(ErrorCode::Convergence, os.str());
      }
      stepper.step_imaginary(psi, dtau);
      psi.normalize();
      ++steps;
      const double e = stepper.energy(psi);
      const double change = std::abs(e - energy);
      energy = e;
      if (change < tolerance) break;
    }
  }
  // Fix the global phase so the peak amplitude is real and positive.
  auto samples = psi.samples();
  const auto peak = std::max_element(samples.begin(), samples.end(),
                                     [](cplx a, cplx b) { return std::norm(a) < std::norm(b); });
  const cplx phase = std::conj(*peak) / std::abs(*peak);
  for (auto& v : samples) v *= phase;
  return {std::move(psi), energy, steps};
}

}  // namespace oamring
