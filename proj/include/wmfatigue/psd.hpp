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

#include <span>
#include <vector>

namespace wmf {

struct WelchOptions {
  double window_s = 1.0;
  double overlap = 0.5;  // fraction of the window, in [0, 1)
};

// One-sided power spectral density on bins k * bin_hz, k = 0 .. n/2.
struct Psd {
  double bin_hz = 0.0;
  std::vector<double> density;

  double frequency(std::size_t k) const { return static_cast<double>(k) * bin_hz; }
};

// Averaged modified periodogram with a periodic Hann window. No detrending.
// Signals shorter than one window use a single window of the signal length.
Psd welch_psd(std::span<const double> samples, double sample_rate_hz,
              const WelchOptions &options = {});

struct MdfOptions {
  WelchOptions welch;
  // Frequency range over which the power is split in halves.
  // f_hi_hz <= 0 means the Nyquist frequency.
  double f_lo_hz = 0.0;
  double f_hi_hz = 0.0;
};

// Median frequency of a PSD restricted to [f_lo, f_hi]. Each bin's power is
// spread uniformly over [f_k - bin/2, f_k + bin/2], which gives sub-bin
// resolution and places a symmetric peak exactly on its center.
// Throws Error("silent segment") when the range holds no power.
double median_frequency(const Psd &psd, double f_lo_hz, double f_hi_hz);

double median_frequency(std::span<const double> samples, double sample_rate_hz,
                        const MdfOptions &options = {});

}  // namespace wmf
