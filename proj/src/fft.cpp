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

#include "oamring/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "oamring/error.hpp"

namespace oamring {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

FftPlan::FftPlan(int n) : n_(n) {
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  forward_ = fftw_plan_dft_1d(n, as_fftw(scratch.data()), as_fftw(scratch.data()),
                              FFTW_FORWARD, flags);
  backward_ = fftw_plan_dft_1d(n, as_fftw(scratch.data()), as_fftw(scratch.data()),
                               FFTW_BACKWARD, flags);
}

FftPlan::~FftPlan() {
  fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_));
}

const FftPlan& FftPlan::get(int n) {
  if (n <= 0) fail(ErrorCode::InvalidParameter, "FFT length must be positive");
  static std::map<int, std::unique_ptr<FftPlan>> cache;
  std::lock_guard lock(planner_mutex());
  auto& slot = cache[n];
  if (!slot) slot.reset(new FftPlan(n));
  return *slot;
}

void FftPlan::forward(std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out) const {
  if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
  fftw_execute_dft(static_cast<fftw_plan>(forward_), as_fftw(out.data()), as_fftw(out.data()));
}

void FftPlan::backward(std::span<const std::complex<double>> in,
                       std::span<std::complex<double>> out) const {
  if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
  fftw_execute_dft(static_cast<fftw_plan>(backward_), as_fftw(out.data()), as_fftw(out.data()));
}

}  // namespace oamring
