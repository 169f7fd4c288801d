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

#include "oamring/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oamring/error.hpp"

namespace oamring {

using std::numbers::pi;

DensityProfile density_profile(const GridState& state) {
  DensityProfile p;
  p.density = state.density();
  p.angles.resize(p.density.size());
  for (int j = 0; j < state.points(); ++j) p.angles[static_cast<std::size_t>(j)] = state.angle(j);
  return p;
}

double fidelity(const SpectralState& a, const SpectralState& b) {
  if (a.cutoff() != b.cutoff()) fail(ErrorCode::InvalidParameter, "fidelity: cutoff mismatch");
  cplx s = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return std::min(1.0, std::norm(s));
}

double fidelity(const GridState& a, const GridState& b) {
  if (a.points() != b.points()) fail(ErrorCode::InvalidParameter, "fidelity: grid mismatch");
  cplx s = 0.0;
  const auto x = a.samples();
  const auto y = b.samples();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return std::min(1.0, std::norm(s * a.spacing()));
}

bool AngularWindow::contains(double alpha) const noexcept {
  double x = std::fmod(alpha - lo, 2.0 * pi);
  if (x < 0.0) x += 2.0 * pi;
  return x > 0.0 && x < width();
}

namespace {

struct WindowSum {
  double population = 0.0;
  double snap = 0.0;
};

WindowSum integrate(const GridState& state, const std::vector<double>& weights,
                    AngularWindow window) {
  WindowSum out;
  const double h = state.spacing();
  double first = 2.0 * pi, last = 2.0 * pi;
  for (int j = 0; j < state.points(); ++j) {
    const double a = state.angle(j);
    if (!window.contains(a)) continue;
    out.population += weights[static_cast<std::size_t>(j)] * std::norm(state[j]);
    double from_lo = std::fmod(a - window.lo, 2.0 * pi);
    if (from_lo < 0.0) from_lo += 2.0 * pi;
    first = std::min(first, from_lo);
    last = std::min(last, window.width() - from_lo);
  }
  out.population *= h;
  out.snap = std::max(first, last);
  return out;
}

}  // namespace

Imbalance population_imbalance(const GridState& state, Weight weight, AngularWindow right,
                               AngularWindow left) {
  if (!(right.width() > 0.0) || !(left.width() > 0.0) || right.width() + left.width() > 2.0 * pi + 1e-12)
    fail(ErrorCode::InvalidParameter, "imbalance windows must be proper disjoint intervals");
  std::vector<double> w(static_cast<std::size_t>(state.points()), 1.0);
  for (int j = 0; j < state.points(); ++j) {
    const double a = state.angle(j);
    if (right.contains(a) && left.contains(a))
      fail(ErrorCode::InvalidParameter, "imbalance windows overlap");
    if (weight == Weight::CosSquared) w[static_cast<std::size_t>(j)] = std::cos(a) * std::cos(a);
  }
  const WindowSum r = integrate(state, w, right);
  const WindowSum l = integrate(state, w, left);
  const double total = r.population + l.population;
  if (total < 1e-12) fail(ErrorCode::IndeterminateImbalance, "weighted population below 1e-12");
  Imbalance out;
  out.right = r.population;
  out.left = l.population;
  out.value = std::clamp((r.population - l.population) / total, -1.0, 1.0);
  out.snap_distance = std::max(r.snap, l.snap);
  return out;
}

namespace {

double centroid_of(cplx moment) {
  if (std::abs(moment) < 1e-6)
    fail(ErrorCode::CentroidUndefined, "density too close to uniform for a centroid");
  return std::arg(moment);
}

}  // namespace

double circular_centroid(const GridState& state) {
  cplx m = 0.0;
  for (int j = 0; j < state.points(); ++j) m += std::polar(std::norm(state[j]), state.angle(j));
  return centroid_of(m * state.spacing());
}

double circular_centroid(const SpectralState& state) {
  cplx m = 0.0;
  for (int l = -state.cutoff(); l < state.cutoff(); ++l) m += std::conj(state[l + 1]) * state[l];
  return centroid_of(m);
}

}  // namespace oamring
