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

#include "oamring/ring_state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "oamring/error.hpp"
#include "oamring/fft.hpp"

namespace oamring {

using std::numbers::pi;

SpectralState::SpectralState(int cutoff)
    : cutoff_(cutoff), amps_(static_cast<std::size_t>(2 * cutoff + 1)) {
  if (cutoff < 0) fail(ErrorCode::InvalidParameter, "cutoff must be non-negative");
}

SpectralState::SpectralState(int cutoff, std::vector<cplx> amplitudes)
    : cutoff_(cutoff), amps_(std::move(amplitudes)) {
  if (cutoff < 0 || amps_.size() != static_cast<std::size_t>(2 * cutoff + 1))
    fail(ErrorCode::InvalidParameter, "amplitude count must be 2L+1");
}

double SpectralState::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amps_) s += std::norm(c);
  return s;
}

double SpectralState::edge_occupation() const {
  if (amps_.empty()) return 0.0;
  return std::max(std::norm(amps_.front()), std::norm(amps_.back()));
}

GridState::GridState(int points) : psi_(static_cast<std::size_t>(points)) {
  if (points <= 0) fail(ErrorCode::InvalidParameter, "grid size must be positive");
}

GridState::GridState(std::vector<cplx> samples) : psi_(std::move(samples)) {
  if (psi_.empty()) fail(ErrorCode::InvalidParameter, "grid size must be positive");
}

double GridState::spacing() const noexcept { return 2.0 * pi / static_cast<double>(psi_.size()); }

double GridState::angle(int j) const noexcept { return spacing() * j; }

double GridState::norm_squared() const {
  double s = 0.0;
  for (const auto& v : psi_) s += std::norm(v);
  return s * spacing();
}

void GridState::normalize() {
  const double n = norm_squared();
  if (!(n > 0.0)) fail(ErrorCode::InvalidParameter, "cannot normalise a zero state");
  const double f = 1.0 / std::sqrt(n);
  for (auto& v : psi_) v *= f;
}

std::vector<double> GridState::density() const {
  std::vector<double> n(psi_.size());
  for (std::size_t j = 0; j < psi_.size(); ++j) n[j] = std::norm(psi_[j]);
  return n;
}

bool is_power_of_two(int n) noexcept { return n > 0 && (n & (n - 1)) == 0; }

double wrap_angle(double angle) noexcept {
  double a = std::remainder(angle, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  return a;
}

SpectralState gaussian_packet(double center, double width, int cutoff) {
  if (!(width > 0.0) || !(width < 1.0))
    fail(ErrorCode::InvalidParameter, "packet width must lie in (0, 1) rad");
  if (static_cast<double>(cutoff) < 4.0 / width) {
    std::ostringstream os;
    os << "cutoff " << cutoff << " too small for width " << width << " (need >= "
       << std::ceil(4.0 / width) << ")";
    fail(ErrorCode::CutoffInsufficient, os.str());
  }
  SpectralState s(cutoff);
  double norm = 0.0;
  for (int l = -cutoff; l <= cutoff; ++l) {
    const double mag = std::exp(-0.25 * l * l * width * width);
    s[l] = std::polar(mag, -l * center);
    norm += mag * mag;
  }
  const double f = 1.0 / std::sqrt(norm);
  for (auto& c : s.amplitudes()) c *= f;
  return s;
}

SpectralState harmonic_packet(double center, double sigma, int cutoff) {
  return gaussian_packet(center, std::sqrt(2.0) * sigma, cutoff);
}

namespace {

void check_aliasing(int cutoff, int points) {
  if (!is_power_of_two(points))
    fail(ErrorCode::InvalidParameter, "grid size must be a power of two");
  if (points < 2 * cutoff + 2) {
    std::ostringstream os;
    os << "grid of " << points << " points aliases cutoff " << cutoff;
    fail(ErrorCode::InvalidParameter, os.str());
  }
}

std::size_t fft_index(int l, int n) { return static_cast<std::size_t>(((l % n) + n) % n); }

}  // namespace

GridState to_grid(const SpectralState& state, int points) {
  check_aliasing(state.cutoff(), points);
  std::vector<cplx> buf(static_cast<std::size_t>(points));
  for (int l = -state.cutoff(); l <= state.cutoff(); ++l) buf[fft_index(l, points)] = state[l];
  FftPlan::get(points).backward(buf, buf);
  const double f = 1.0 / std::sqrt(2.0 * pi);
  for (auto& v : buf) v *= f;
  return GridState(std::move(buf));
}

SpectralState to_spectral(const GridState& state, int cutoff) {
  check_aliasing(cutoff, state.points());
  const int n = state.points();
  std::vector<cplx> buf(state.samples().begin(), state.samples().end());
  FftPlan::get(n).forward(buf, buf);
  const double f = std::sqrt(2.0 * pi) / n;
  SpectralState s(cutoff);
  for (int l = -cutoff; l <= cutoff; ++l) s[l] = f * buf[fft_index(l, n)];
  return s;
}

SpectralState rotate(const SpectralState& state, double angle) {
  SpectralState out = state;
  for (int l = -state.cutoff(); l <= state.cutoff(); ++l)
    out[l] *= std::polar(1.0, -std::fmod(l * angle, 2.0 * pi));
  return out;
}

GridState rotate(const GridState& state, double angle) {
  const int n = state.points();
  std::vector<cplx> buf(state.samples().begin(), state.samples().end());
  const auto& fft = FftPlan::get(n);
  fft.forward(buf, buf);
  for (int k = 0; k < n; ++k) {
    const int l = k < n / 2 ? k : k - n;
    // The Nyquist mode is kept real-symmetric by splitting it between +-n/2.
    const cplx phase = (k == n / 2) ? cplx(std::cos(l * angle), 0.0)
                                    : std::polar(1.0, -std::fmod(l * angle, 2.0 * pi));
    buf[static_cast<std::size_t>(k)] *= phase / static_cast<double>(n);
  }
  fft.backward(buf, buf);
  return GridState(std::move(buf));
}

}  // namespace oamring
