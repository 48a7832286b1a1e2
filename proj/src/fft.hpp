// Copyright 2026 The wmfatigue Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <span>

namespace wmf::detail {

// Real <-> half-complex transforms of a fixed length, backed by FFTW.
// Not thread-safe: FFTW planning uses global state.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft &) = delete;
  RealFft &operator=(const RealFft &) = delete;

  std::size_t size() const { return n_; }
  std::size_t bins() const { return n_ / 2 + 1; }

  // Fill time() then call forward(); the spectrum lands in freq().
  std::span<double> time() { return {real_, n_}; }
  std::span<std::complex<double>> freq() {
    return {reinterpret_cast<std::complex<double> *>(spec_), bins()};
  }
  void forward();
  // Unnormalized inverse: time() = n * x after forward() then inverse().
  void inverse();

 private:
  std::size_t n_;
  double *real_ = nullptr;
  fftw_complex *spec_ = nullptr;
  fftw_plan fwd_ = nullptr;
  fftw_plan inv_ = nullptr;
};

}  // namespace wmf::detail
