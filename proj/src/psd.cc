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

#include "wmfatigue/psd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "wmfatigue/error.hpp"

namespace wmf {

Psd welch_psd(std::span<const double> samples, double sample_rate_hz, const WelchOptions &options) {
  if (!(sample_rate_hz > 0.0)) throw Error("welch: sample rate must be positive");
  if (!(options.window_s > 0.0)) throw Error("welch: window length must be positive");
  if (!(options.overlap >= 0.0 && options.overlap < 1.0)) {
    throw Error("welch: overlap must be in [0, 1)");
  }
  if (samples.size() < 2) throw Error("welch: need at least 2 samples");

  std::size_t nw = static_cast<std::size_t>(std::llround(options.window_s * sample_rate_hz));
  nw = std::clamp<std::size_t>(nw, 2, samples.size());
  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(nw) * (1.0 - options.overlap))));

  std::vector<double> window(nw);
  double window_power = 0.0;
  for (std::size_t i = 0; i < nw; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                     static_cast<double>(nw));
    window_power += window[i] * window[i];
  }

  detail::RealFft fft(nw);
  Psd psd;
  psd.bin_hz = sample_rate_hz / static_cast<double>(nw);
  psd.density.assign(fft.bins(), 0.0);

  std::size_t frames = 0;
  for (std::size_t start = 0; start + nw <= samples.size(); start += hop) {
    auto buf = fft.time();
    for (std::size_t i = 0; i < nw; ++i) buf[i] = samples[start + i] * window[i];
    fft.forward();
    const auto spec = fft.freq();
    for (std::size_t k = 0; k < spec.size(); ++k) psd.density[k] += std::norm(spec[k]);
    ++frames;
  }

  const double scale = 1.0 / (sample_rate_hz * window_power * static_cast<double>(frames));
  const std::size_t last = psd.density.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    const bool unpaired = k == 0 || (nw % 2 == 0 && k == last);
    psd.density[k] *= unpaired ? scale : 2.0 * scale;
  }
  return psd;
}

double median_frequency(const Psd &psd, double f_lo_hz, double f_hi_hz) {
  if (psd.density.empty()) throw Error("median_frequency: empty spectrum");
  const double nyquist = psd.frequency(psd.density.size() - 1);
  const double hi = f_hi_hz > 0.0 ? std::min(f_hi_hz, nyquist) : nyquist;
  const double lo = std::max(f_lo_hz, 0.0);
  if (!(lo < hi)) throw Error("median_frequency: empty frequency range");

  double total = 0.0;
  std::size_t first = psd.density.size();
  std::size_t end = 0;
  for (std::size_t k = 0; k < psd.density.size(); ++k) {
    const double f = psd.frequency(k);
    if (f < lo || f > hi) continue;
    first = std::min(first, k);
    end = k + 1;
    total += psd.density[k];
  }
  if (!(total > 0.0) || !std::isfinite(total)) throw Error("silent segment");

  const double half = total / 2.0;
  double cum = 0.0;
  for (std::size_t k = first; k < end; ++k) {
    const double p = psd.density[k];
    if (p > 0.0 && cum + p >= half) {
      const double m = psd.frequency(k) - psd.bin_hz / 2.0 + (half - cum) / p * psd.bin_hz;
      return std::clamp(m, lo, hi);
    }
    cum += p;
  }
  return hi;
}

double median_frequency(std::span<const double> samples, double sample_rate_hz,
                        const MdfOptions &options) {
  return median_frequency(welch_psd(samples, sample_rate_hz, options.welch), options.f_lo_hz,
                          options.f_hi_hz);
}

}  // namespace wmf
