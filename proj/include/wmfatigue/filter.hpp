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

#include <complex>
#include <span>
#include <vector>

namespace wmf {

// Normalized biquad: H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2).
struct SecondOrderSection {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  std::complex<double> response(std::complex<double> z_inv) const;
  // Largest pole magnitude.
  double pole_radius() const;
};

enum class FilterKind { kBandpass, kBandstop };

struct FilterDesign {
  FilterKind kind = FilterKind::kBandpass;
  int order = 0;
  double f_lo_hz = 0.0;
  double f_hi_hz = 0.0;
  double sample_rate_hz = 0.0;
};

// Cascade of biquads. Immutable once built; construction rejects unstable
// sections.
class FilterCascade {
 public:
  FilterCascade(std::vector<SecondOrderSection> sections, FilterDesign meta);

  const std::vector<SecondOrderSection> &sections() const { return sections_; }
  const FilterDesign &design() const { return meta_; }

  std::complex<double> response(double f_hz) const;
  double magnitude_db(double f_hz) const;
  bool is_stable() const;

 private:
  std::vector<SecondOrderSection> sections_;
  FilterDesign meta_;
};

// Digital Butterworth band-pass or band-stop. `order` is the order of the
// resulting filter (twice the analog prototype order) and must be one of
// 2, 4, 6, 8. Analog prototype + frequency transformation + bilinear
// transform with pre-warped band edges, so both edges sit at -3.01 dB.
FilterCascade design_butterworth(FilterKind kind, int order, double f_lo_hz, double f_hi_hz,
                                 double sample_rate_hz);

// Causal single-pass filtering (transposed direct form II, zero initial state).
std::vector<double> apply_filter(const FilterCascade &cascade, std::span<const double> samples);

// Forward-backward filtering; zero phase, squared magnitude response.
std::vector<double> apply_filter_zero_phase(const FilterCascade &cascade,
                                            std::span<const double> samples);

}  // namespace wmf
