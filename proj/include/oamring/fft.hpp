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

namespace oamring {

/// Unnormalised complex DFT pair of a fixed power-of-two length, backed by
/// FFTW. Plans are created once per length and shared; execution is
/// thread-safe.
class FftPlan {
 public:
  static const FftPlan& get(int n);

  int size() const noexcept { return n_; }

  /// out_k = sum_j in_j exp(-2 pi i jk/n). In-place is allowed.
  void forward(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;
  /// out_j = sum_k in_k exp(+2 pi i jk/n).
  void backward(std::span<const std::complex<double>> in,
                std::span<std::complex<double>> out) const;

  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan();

 private:
  explicit FftPlan(int n);

  int n_;
  void* forward_;
  void* backward_;
};

}  // namespace oamring
