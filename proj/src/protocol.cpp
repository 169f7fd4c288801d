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

#include "oamring/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "oamring/error.hpp"

namespace oamring {

using std::numbers::pi;

std::vector<double> imprint_profile(const ProtocolSpec& spec, double phase, double origin) {
  const auto& imp = spec.imprint;
  std::vector<double> out(static_cast<std::size_t>(spec.grid_points), 0.0);
  const double h = 2.0 * pi / spec.grid_points;
  for (int j = 0; j < spec.grid_points; ++j) {
    const double rel = h * j - origin;
    if (!imp.window.contains(rel)) continue;
    const double c = std::cos(rel);
    out[static_cast<std::size_t>(j)] = phase * (imp.profile == ImprintProfile::CosSquared ? c * c : 1.0);
  }
  return out;
}

GridState apply_imprint(const ProtocolSpec& spec, const GridState& state, double phase) {
  if (state.points() != spec.grid_points) fail(ErrorCode::InvalidParameter, "grid size mismatch");
  const auto prof = imprint_profile(spec, phase, spec.center_rad);
  GridState out = state;
  for (int j = 0; j < out.points(); ++j) out[j] *= std::polar(1.0, prof[static_cast<std::size_t>(j)]);
  return out;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ProtocolSpec packet_frame(const ProtocolSpec& spec) {
  ProtocolSpec out = spec;
  out.center_rad = 0.0;
  return out;
}

// Everything a run needs, in internal units. The run itself happens in the
// frame of the initial packet; only reported states and angles carry the
// configured center.
class Session {
 public:
  explicit Session(const ProtocolSpec& lab)
      : spec_(packet_frame(lab)),
        center_(lab.center_rad),
        units_(make_unit_system(lab.trap)),
        ring_(to_internal(lab.trap)),
        coupling_(lab.interaction.coupling_internal(lab.trap)) {
    validate(lab);
    const ProtocolSpec& spec = spec_;
    linear_ = spec.solver == Solver::LinearSpectral;
    const int model_cutoff = linear_ ? spec.cutoff : std::max(spec.cutoff, spec.grid_points / 2);
    model_ = corrected_dispersion(ring_, model_cutoff, spec.corrections);
    dt_ = spec.dt_fraction * kIdealRevivalTime;
    if (ring_.flux_angle != 0.0) flux_ = FluxSpec{ring_.flux_angle, units_.time_to_internal(spec.flux_on_s)};
    if (!linear_) {
      plain_.emplace(spec.grid_points, model_, coupling_);
      drifting_.emplace(spec.grid_points, model_, coupling_, GridPotential{},
                        ring_.flux_angle / kIdealRevivalTime);
    }
    initial_grid_ = initial_state(spec);
    initial_spectral_ = linear_ ? harmonic_packet(0.0, ring_.transverse_width(), spec.cutoff)
                                : to_spectral(initial_grid_, spec.cutoff);
  }

  const ProtocolSpec& spec() const { return spec_; }
  double center() const { return center_; }
  const UnitSystem& units() const { return units_; }
  const RingParameters& ring() const { return ring_; }
  bool linear() const { return linear_; }
  double dt() const { return dt_; }
  double dispersion_time() const { return 1.0 / ring_.omega_perp; }

  struct Wave {
    SpectralState spectral;  // live for the linear solver
    GridState grid;          // live for split stepping
  };

  Wave initial() const { return linear_ ? Wave{initial_spectral_, {}} : Wave{{}, initial_grid_}; }

  double flux_rotation(double t) const {
    if (!flux_) return 0.0;
    return flux_->angle * std::max(0.0, t - flux_->turn_on) / kIdealRevivalTime;
  }

  // Free evolution from t0 to t1; `sample` is called with (t, wave) for every
  // sample time in (t0, t1]. Split stepping snaps samples to step boundaries.
  template <class Sampler>
  void evolve(Wave& w, double t0, double t1, const std::vector<double>& samples,
              Sampler&& sample) const {
    if (t1 <= t0) return;
    auto pending = std::lower_bound(samples.begin(), samples.end(), t0,
                                    [](double s, double t) { return s <= t; });
    if (linear_) {
      double t = t0;
      for (; pending != samples.end() && *pending <= t1; ++pending) {
        w.spectral = evolve_linear(w.spectral, *pending - t, model_, flux_, t);
        t = *pending;
        sample(*pending, t, w);
      }
      w.spectral = evolve_linear(w.spectral, t1 - t, model_, flux_, t);
      return;
    }
    double t = t0;
    if (flux_ && t < flux_->turn_on && flux_->turn_on < t1) {
      step_range(*plain_, w, t, flux_->turn_on, pending, samples.end(), sample);
      t = flux_->turn_on;
    }
    const SplitStepper& stepper = (flux_ && t >= flux_->turn_on) ? *drifting_ : *plain_;
    step_range(stepper, w, t, t1, pending, samples.end(), sample);
  }

  void evolve(Wave& w, double t0, double t1) const {
    static const std::vector<double> none;
    evolve(w, t0, t1, none, [](double, double, const Wave&) {});
  }

  // Applies exp(i phase f(alpha)) instantly or over `duration` (internal units)
  // via an extra potential -phase f / duration.
  void imprint(Wave& w, double phase, double t, double duration) const {
    if (duration <= 0.0) {
      GridState g = apply_imprint(spec_, grid_of(w), phase);
      if (linear_) w.spectral = to_spectral(g, spec_.cutoff);
      else w.grid = std::move(g);
      return;
    }
    const auto prof = imprint_profile(spec_, phase);
    GridPotential v(prof.size());
    for (std::size_t j = 0; j < prof.size(); ++j) v[j] = -prof[j] / duration;
    const bool drift = flux_ && t >= flux_->turn_on;
    const double coupling = linear_ ? 0.0 : coupling_;
    const DispersionModel& model = linear_ ? grid_model() : model_;
    SplitStepper pulse(spec_.grid_points, model, coupling, std::move(v),
                       drift ? ring_.flux_angle / kIdealRevivalTime : 0.0);
    GridState g = linear_ ? to_grid(w.spectral, spec_.grid_points) : w.grid;
    pulse.advance(g, duration, dt_);
    if (linear_) w.spectral = to_spectral(g, spec_.cutoff);
    else w.grid = std::move(g);
  }

  GridState grid_of(const Wave& w) const {
    return linear_ ? to_grid(w.spectral, spec_.grid_points) : w.grid;
  }
  SpectralState spectral_of(const Wave& w) const {
    return linear_ ? w.spectral : to_spectral(w.grid, spec_.cutoff);
  }

  GridState lab_grid(const Wave& w) const {
    return center_ == 0.0 ? grid_of(w) : rotate(grid_of(w), center_);
  }
  SpectralState lab_spectral(const Wave& w) const {
    return center_ == 0.0 ? spectral_of(w) : rotate(spectral_of(w), center_);
  }

  double revival_fidelity(const Wave& w, double t) const {
    const double angle = pi + flux_rotation(t);
    if (linear_) return fidelity(rotate(initial_spectral_, angle), w.spectral);
    return fidelity(rotate(initial_grid_, angle), w.grid);
  }

  double imbalance(const Wave& w) const {
    try {
      return population_imbalance(grid_of(w), spec_.readout_weight, spec_.right_window, spec_.left_window).value;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IndeterminateImbalance) return kNaN;
      throw;
    }
  }

  double centroid(const Wave& w) const {
    try {
      return wrap_angle((linear_ ? circular_centroid(w.spectral) : circular_centroid(w.grid)) + center_);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CentroidUndefined) return kNaN;
      throw;
    }
  }

 private:
  template <class It, class Sampler>
  void step_range(const SplitStepper& stepper, Wave& w, double t0, double t1, It& pending, It end,
                  Sampler&& sample) const {
    const double span = t1 - t0;
    const long count = std::max(1L, static_cast<long>(std::ceil(span / dt_ - 1e-9)));
    for (long i = 1; i <= count; ++i) {
      const double t_prev = t0 + static_cast<double>(i - 1) * dt_;
      const double t = (i == count) ? t1 : t0 + static_cast<double>(i) * dt_;
      stepper.step(w.grid, t - t_prev);
      while (pending != end && *pending <= t + 0.5 * dt_ && *pending <= t1) {
        sample(*pending, t, w);
        ++pending;
      }
    }
  }

  const DispersionModel& grid_model() const {
    if (!grid_model_) {
      grid_model_ = corrected_dispersion(ring_, spec_.grid_points / 2, spec_.corrections);
    }
    return *grid_model_;
  }

  ProtocolSpec spec_;
  double center_ = 0.0;
  UnitSystem units_;
  RingParameters ring_;
  double coupling_;
  bool linear_ = true;
  DispersionModel model_;
  double dt_ = 0.0;
  std::optional<FluxSpec> flux_;
  std::optional<SplitStepper> plain_;
  std::optional<SplitStepper> drifting_;
  GridState initial_grid_;
  SpectralState initial_spectral_;
  mutable std::optional<DispersionModel> grid_model_;
};

double golden_maximum(double lo, double hi, double resolution, auto&& f) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > resolution) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

// Returns the optimum in internal units.
double search_revival(const Session& s, double lo, double hi, double resolution) {
  if (!(resolution > 0.0)) fail(ErrorCode::InvalidParameter, "resolution must be positive");
  if (!(hi > lo) || lo < 0.0) fail(ErrorCode::InvalidParameter, "revival window must satisfy 0 <= lo < hi");
  const double pitch_target = 0.25 * s.dispersion_time();
  using Wave = Session::Wave;

  std::vector<double> times;
  std::vector<double> fids;
  std::vector<Wave> checkpoints;  // split stepping only
  if (s.linear()) {
    const Wave w0 = s.initial();
    const long n = static_cast<long>(std::ceil((hi - lo) / pitch_target));
    for (long i = 0; i <= n; ++i) {
      const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
      Wave w = w0;
      s.evolve(w, 0.0, t);
      times.push_back(t);
      fids.push_back(s.revival_fidelity(w, t));
    }
  } else {
    const double pitch = std::max(1.0, std::round(pitch_target / s.dt())) * s.dt();
    Wave w = s.initial();
    s.evolve(w, 0.0, lo);
    for (double t = lo;; t += pitch) {
      times.push_back(t);
      fids.push_back(s.revival_fidelity(w, t));
      checkpoints.push_back(w);
      if (t + pitch > hi + 1e-12) break;
      s.evolve(w, t, t + pitch);
    }
  }

  const auto best = static_cast<std::size_t>(std::max_element(fids.begin(), fids.end()) - fids.begin());
  if (fids[best] < 0.1) {
    std::ostringstream os;
    os << "no revival above fidelity 0.1 in the search window (best " << fids[best] << ")";
    fail(ErrorCode::RevivalNotFound, os.str());
  }
  const std::size_t left = best > 0 ? best - 1 : best;
  const std::size_t right = std::min(best + 1, times.size() - 1);
  if (left == right) return times[best];

  auto fidelity_at = [&](double t) {
    if (s.linear()) {
      Wave w = s.initial();
      s.evolve(w, 0.0, t);
      return s.revival_fidelity(w, t);
    }
    Wave w = checkpoints[left];
    s.evolve(w, times[left], t);
    return s.revival_fidelity(w, t);
  };
  return golden_maximum(times[left], times[right], resolution, fidelity_at);
}

struct Timeline {
  double imprint_start = 0.0;
  double imprint_duration = 0.0;
  double readout = 0.0;
};

Timeline timeline(const Session& s, double revival) {
  const auto& spec = s.spec();
  Timeline tl;
  tl.imprint_start = 0.5 * revival + s.units().time_to_internal(spec.imprint_offset_s);
  tl.imprint_duration = s.units().time_to_internal(spec.imprint.duration_s);
  tl.readout = revival + tl.imprint_duration + s.units().time_to_internal(spec.readout_offset_s);
  if (tl.imprint_start < 0.0) fail(ErrorCode::Configuration, "imprint offset moves the imprint before t = 0");
  if (tl.readout < tl.imprint_start + tl.imprint_duration)
    fail(ErrorCode::Configuration, "readout offset moves the readout before the imprint ends");
  return tl;
}

double revival_for(const Session& s) {
  const auto& spec = s.spec();
  if (spec.revival_time_s) return s.units().time_to_internal(*spec.revival_time_s);
  return search_revival(s, spec.search.lo_fraction * kIdealRevivalTime,
                        spec.search.hi_fraction * kIdealRevivalTime,
                        s.units().time_to_internal(spec.search.resolution_s));
}

std::vector<double> linspace(double hi, int count) {
  std::vector<double> out;
  if (count <= 0) return out;
  if (count == 1) return {hi};
  for (int i = 0; i < count; ++i) out.push_back(hi * i / (count - 1));
  return out;
}

ProtocolResult finish(const Session& s, Session::Wave w, double revival, const Timeline& tl,
                      double after_imprint_from, double phase) {
  // `after_imprint_from` is the time of `w`; it is either 0 or the imprint start.
  const auto& spec = s.spec();
  const auto& units = s.units();
  ProtocolResult r;
  r.revival_time_s = units.time_to_si(revival);
  r.duration_s = units.time_to_si(tl.readout);

  auto series_times = linspace(tl.readout, spec.series_samples);
  auto snap_times = linspace(tl.readout, spec.snapshots);
  std::vector<double> all = series_times;
  all.insert(all.end(), snap_times.begin(), snap_times.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  auto record = [&](double requested, double t, const Session::Wave& wave) {
    const double t_s = units.time_to_si(t);
    if (std::binary_search(series_times.begin(), series_times.end(), requested)) {
      SeriesPoint p;
      p.t_s = t_s;
      p.fidelity = s.revival_fidelity(wave, t);
      p.imbalance = s.imbalance(wave);
      p.centroid_rad = s.centroid(wave);
      r.series.push_back(p);
    }
    if (std::binary_search(snap_times.begin(), snap_times.end(), requested))
      r.snapshots.push_back({t_s, density_profile(s.lab_grid(wave))});
  };

  if (after_imprint_from == 0.0) {
    if (!all.empty() && all.front() == 0.0) record(0.0, 0.0, w);
    s.evolve(w, 0.0, tl.imprint_start, all, record);
  }
  s.imprint(w, phase, tl.imprint_start, tl.imprint_duration);
  s.evolve(w, tl.imprint_start + tl.imprint_duration, tl.readout, all, record);

  r.final_grid = s.lab_grid(w);
  r.final_spectral = s.lab_spectral(w);
  r.fidelity = s.revival_fidelity(w, tl.readout);
  r.imbalance = s.imbalance(w);
  r.centroid_rad = s.centroid(w);
  return r;
}

template <class Out, class F>
std::vector<Out> parallel_map(std::size_t count, int threads, F&& f) {
  std::vector<Out> out(count);
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int k = 0; k < workers; ++k) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

void validate(const ProtocolSpec& spec) {
  validate(spec.trap);
  if (spec.solver == Solver::LinearSpectral && spec.interaction.coupling_internal(spec.trap) != 0.0)
    fail(ErrorCode::Configuration, "the linear spectral solver requires zero interaction (g1 = 0)");
  if (!is_power_of_two(spec.grid_points))
    fail(ErrorCode::Configuration, "grid_points must be a power of two");
  if (spec.grid_points < 2 * spec.cutoff + 2)
    fail(ErrorCode::Configuration, "grid_points must be at least 2 * cutoff + 2");
  if (!(spec.dt_fraction > 0.0)) fail(ErrorCode::Configuration, "time step must be positive");
  if (!(spec.imprint.window.width() > 0.0) || spec.imprint.window.width() >= 2.0 * pi)
    fail(ErrorCode::Configuration, "imprint window must be a proper sub-interval of the ring");
  if (spec.imprint.duration_s < 0.0) fail(ErrorCode::Configuration, "imprint duration must be >= 0");
  if (!(spec.search.hi_fraction > spec.search.lo_fraction) || spec.search.lo_fraction < 0.0)
    fail(ErrorCode::Configuration, "revival search window must satisfy 0 <= lo < hi");
  if (!(spec.search.resolution_s > 0.0))
    fail(ErrorCode::Configuration, "revival search resolution must be positive");
  if (!std::isfinite(spec.imprint.phase_rad)) fail(ErrorCode::Configuration, "imprint phase must be finite");
}

GridState initial_state(const ProtocolSpec& spec) {
  const RingParameters ring = to_internal(spec.trap);
  if (spec.solver == Solver::LinearSpectral)
    return to_grid(harmonic_packet(spec.center_rad, ring.transverse_width(), spec.cutoff), spec.grid_points);
  const double g = spec.interaction.coupling_internal(spec.trap);
  auto ground = ground_state_imaginary_time(ring.omega_perp, g, spec.grid_points, 1e-11);
  return rotate(ground.state, spec.center_rad);
}

double find_revival_time(const ProtocolSpec& spec, double t_lo_s, double t_hi_s, double resolution_s) {
  const Session s(spec);
  const auto& u = s.units();
  return u.time_to_si(search_revival(s, u.time_to_internal(t_lo_s), u.time_to_internal(t_hi_s),
                                     u.time_to_internal(resolution_s)));
}

double find_revival_time(const ProtocolSpec& spec) {
  const Session s(spec);
  return s.units().time_to_si(revival_for(s));
}

ProtocolResult run_protocol(const ProtocolSpec& spec) {
  const Session s(spec);
  const double revival = revival_for(s);
  const Timeline tl = timeline(s, revival);
  return finish(s, s.initial(), revival, tl, 0.0, spec.imprint.phase_rad);
}

std::vector<PhasePoint> sweep_phase(const ProtocolSpec& spec, const std::vector<double>& phis,
                                    int threads) {
  for (double phi : phis)
    if (!std::isfinite(phi)) fail(ErrorCode::InvalidParameter, "phase values must be finite");
  ProtocolSpec base = spec;
  base.series_samples = 0;
  base.snapshots = 0;
  const Session s(base);
  const double revival = revival_for(s);
  const Timeline tl = timeline(s, revival);
  // The evolution up to the imprint does not depend on the phase.
  Session::Wave at_imprint = s.initial();
  s.evolve(at_imprint, 0.0, tl.imprint_start);
  return parallel_map<PhasePoint>(phis.size(), threads, [&](std::size_t i) {
    const ProtocolResult r = finish(s, at_imprint, revival, tl, tl.imprint_start, phis[i]);
    return PhasePoint{phis[i], r.imbalance};
  });
}

std::vector<TimingPoint> timing_sensitivity(const ProtocolSpec& spec, const std::vector<double>& offsets_s,
                                            int threads) {
  ProtocolSpec base = spec;
  base.series_samples = 0;
  base.snapshots = 0;
  if (!base.revival_time_s) base.revival_time_s = find_revival_time(base);
  return parallel_map<TimingPoint>(offsets_s.size(), threads, [&](std::size_t i) {
    ProtocolSpec shifted = base;
    shifted.imprint_offset_s += offsets_s[i];
    shifted.readout_offset_s += offsets_s[i];
    const ProtocolResult r = run_protocol(shifted);
    return TimingPoint{offsets_s[i], r.fidelity, r.imbalance};
  });
}

}  // namespace oamring
