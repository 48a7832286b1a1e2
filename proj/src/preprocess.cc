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

#include "wmfatigue/preprocess.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "wmfatigue/error.hpp"

namespace wmf {

std::vector<double> remove_outliers(std::span<const double> samples, double k_sd) {
  if (samples.size() < 2) throw Error("remove_outliers: need at least 2 samples");
  if (!(k_sd > 0.0)) throw Error("remove_outliers: k_sd must be positive");

  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double bound = k_sd * std::sqrt(ss / n);

  std::vector<double> out(samples.begin(), samples.end());
  std::vector<bool> keep(samples.size());
  bool any_kept = false;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    keep[i] = !(std::abs(samples[i] - mean) > bound);
    any_kept = any_kept || keep[i];
  }
  if (!any_kept) throw Error("degenerate signal");

  // Walk runs of flagged samples.
  std::size_t i = 0;
  const std::size_t len = samples.size();
  while (i < len) {
    if (keep[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < len && !keep[j]) ++j;
    // Flagged run [i, j).
    if (i == 0) {
      for (std::size_t k = i; k < j; ++k) out[k] = samples[j];
    } else if (j == len) {
      for (std::size_t k = i; k < j; ++k) out[k] = samples[i - 1];
    } else {
      const double left = samples[i - 1];
      const double right = samples[j];
      const double span_len = static_cast<double>(j - (i - 1));
      for (std::size_t k = i; k < j; ++k) {
        const double frac = static_cast<double>(k - (i - 1)) / span_len;
        out[k] = left + frac * (right - left);
      }
    }
    i = j;
  }
  return out;
}

std::size_t segment_samples(double sample_rate_hz, double segment_len_s) {
  if (!(segment_len_s > 0.0)) throw Error("segment length must be positive");
  if (!(sample_rate_hz > 0.0)) throw Error("sample rate must be positive");
  const double n = std::round(segment_len_s * sample_rate_hz);
  if (n < 1.0) throw Error("segment length shorter than one sample");
  return static_cast<std::size_t>(n);
}

SegmentSet segment(std::span<const double> samples, double sample_rate_hz, double segment_len_s) {
  const std::size_t per = segment_samples(sample_rate_hz, segment_len_s);
  const std::size_t count = samples.size() / per;
  if (count == 0) {
    throw Error("signal shorter than one segment (" + std::to_string(segment_len_s) + " s)");
  }
  SegmentSet set;
  set.segment_len_s = static_cast<double>(per) / sample_rate_hz;
  set.sample_rate_hz = sample_rate_hz;
  set.segments.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    Segment seg;
    seg.start_s = static_cast<double>(j * per) / sample_rate_hz;
    seg.samples.assign(samples.begin() + static_cast<std::ptrdiff_t>(j * per),
                       samples.begin() + static_cast<std::ptrdiff_t>((j + 1) * per));
    set.segments.push_back(std::move(seg));
  }
  return set;
}

std::vector<double> preprocess_channel(std::span<const double> samples, double sample_rate_hz,
                                       const PreprocessConfig &config) {
  const auto bandpass = design_butterworth(FilterKind::kBandpass, config.bandpass.order,
                                           config.bandpass.lo_hz, config.bandpass.hi_hz,
                                           sample_rate_hz);
  const auto bandstop = design_butterworth(FilterKind::kBandstop, config.bandstop.order,
                                           config.bandstop.lo_hz, config.bandstop.hi_hz,
                                           sample_rate_hz);
  std::vector<double> x = remove_outliers(samples, config.outlier_k_sd);
  if (config.zero_phase) {
    x = apply_filter_zero_phase(bandpass, x);
    return apply_filter_zero_phase(bandstop, x);
  }
  x = apply_filter(bandpass, x);
  return apply_filter(bandstop, x);
}

void remove_mean(std::vector<double> &samples) {
  if (samples.empty()) return;
  const double mean =
      std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  for (double &x : samples) x -= mean;
}

}  // namespace wmf
