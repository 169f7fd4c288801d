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

#include <complex>
#include <span>
#include <vector>

namespace oamring {

using cplx = std::complex<double>;

/// Amplitudes c_l for l = -L..L, stored at index l + L.
class SpectralState {
 public:
  SpectralState() = default;
  explicit SpectralState(int cutoff);
  SpectralState(int cutoff, std::vector<cplx> amplitudes);

  int cutoff() const noexcept { return cutoff_; }
  std::size_t size() const noexcept { return amps_.size(); }

  cplx operator[](int l) const { return amps_[static_cast<std::size_t>(l + cutoff_)]; }
  cplx& operator[](int l) { return amps_[static_cast<std::size_t>(l + cutoff_)]; }

  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  std::span<cplx> amplitudes() noexcept { return amps_; }

  double norm_squared() const;
  /// max(|c_L|^2, |c_-L|^2); small values mean the cutoff is adequate.
  double edge_occupation() const;

 private:
  int cutoff_ = 0;
  std::vector<cplx> amps_;
};

/// Samples psi(alpha_j) at alpha_j = 2 pi j / N with norm (2 pi/N) sum |psi_j|^2.
class GridState {
 public:
  GridState() = default;
  explicit GridState(int points);
  explicit GridState(std::vector<cplx> samples);

  int points() const noexcept { return static_cast<int>(psi_.size()); }
  double spacing() const noexcept;
  double angle(int j) const noexcept;

  cplx operator[](int j) const { return psi_[static_cast<std::size_t>(j)]; }
  cplx& operator[](int j) { return psi_[static_cast<std::size_t>(j)]; }

  std::span<const cplx> samples() const noexcept { return psi_; }
  std::span<cplx> samples() noexcept { return psi_; }

  double norm_squared() const;
  void normalize();
  /// n(alpha_j) = |psi_j|^2 in 1/rad.
  std::vector<double> density() const;

 private:
  std::vector<cplx> psi_;
};

bool is_power_of_two(int n) noexcept;

/// Wrapped Gaussian built in the l basis: c_l ~ exp(-l^2 w^2/4 - i l center),
/// i.e. psi(alpha) ~ exp(-(alpha - center)^2 / w^2). Requires
/// 0 < width < 1 and cutoff >= 4/width.
SpectralState gaussian_packet(double center, double width, int cutoff);

/// Ground state of a harmonic angular well with amplitude width sigma,
/// psi ~ exp(-(alpha - center)^2 / (2 sigma^2)).
SpectralState harmonic_packet(double center, double sigma, int cutoff);

GridState to_grid(const SpectralState& state, int points);
SpectralState to_spectral(const GridState& state, int cutoff);

/// Active rotation: the density moves by +angle, c_l -> exp(-i l angle) c_l.
SpectralState rotate(const SpectralState& state, double angle);
GridState rotate(const GridState& state, double angle);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle) noexcept;

}  // namespace oamring
