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

#include <vector>

#include "oamring/ring_state.hpp"

namespace oamring {

struct DensityProfile {
  std::vector<double> angles;   // rad
  std::vector<double> density;  // 1/rad, integrates to 1
};

DensityProfile density_profile(const GridState& state);

/// |<a|b>|^2. Throws InvalidParameter for mismatched cutoffs or grids.
double fidelity(const SpectralState& a, const SpectralState& b);
double fidelity(const GridState& a, const GridState& b);

enum class Weight { Uniform, CosSquared };

/// Open angular interval (lo, hi), taken modulo 2 pi; hi may exceed 2 pi to
/// express a window that wraps through alpha = 0.
struct AngularWindow {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double alpha) const noexcept;
  double width() const noexcept { return hi - lo; }
};

/// Initial packet side (alpha = 0) counts as "right".
inline constexpr AngularWindow kRightHalf{-1.5707963267948966, 1.5707963267948966};
inline constexpr AngularWindow kLeftHalf{1.5707963267948966, 4.71238898038469};

struct Imbalance {
  double value = 0.0;      // (N_R - N_L) / (N_R + N_L)
  double right = 0.0;      // weighted populations
  double left = 0.0;
  double snap_distance = 0.0;  // largest gap between a window edge and the first grid point inside
};

/// Weighted population imbalance by rectangle-rule quadrature over the grid
/// points inside each window. Throws IndeterminateImbalance when the weighted
/// total is below 1e-12 and InvalidParameter when the windows overlap.
Imbalance population_imbalance(const GridState& state, Weight weight = Weight::CosSquared,
                               AngularWindow right = kRightHalf,
                               AngularWindow left = kLeftHalf);

/// arg of the first circular moment of the density. Throws CentroidUndefined
/// when the resultant length is below 1e-6.
double circular_centroid(const GridState& state);
/// Evaluated exactly from the amplitudes: the first moment is
/// sum_l conj(c_{l+1}) c_l.
double circular_centroid(const SpectralState& state);

}  // namespace oamring
