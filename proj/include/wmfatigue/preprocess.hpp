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

#include <cstddef>
#include <span>
#include <vector>

#include "wmfatigue/filter.hpp"

namespace wmf {

// Replaces samples with |x - mean| > k_sd * SD (population SD, whole
// sequence) by linear interpolation between the nearest surviving
// neighbours; flagged runs at either end take the nearest surviving value.
// Output length equals input length. Throws Error("degenerate signal") when
// every sample is flagged.
std::vector<double> remove_outliers(std::span<const double> samples, double k_sd = 3.0);

struct Segment {
  double start_s = 0.0;
  std::vector<double> samples;
};

// Contiguous, non-overlapping segments of identical length. A trailing
// partial segment is discarded.
struct SegmentSet {
  double segment_len_s = 0.0;
  double sample_rate_hz = 0.0;
  std::vector<Segment> segments;

  std::size_t size() const { return segments.size(); }
  // T_j: end time of segment j.
  double end_time(std::size_t j) const { return segments[j].start_s + segment_len_s; }
};

// Samples per segment: segment_len_s * sample_rate_hz rounded to the nearest
// integer.
std::size_t segment_samples(double sample_rate_hz, double segment_len_s);

SegmentSet segment(std::span<const double> samples, double sample_rate_hz, double segment_len_s);

struct BandSpec {
  int order = 0;
  double lo_hz = 0.0;
  double hi_hz = 0.0;
};

struct PreprocessConfig {
  BandSpec bandpass{6, 10.0, 500.0};
  BandSpec bandstop{2, 49.0, 51.0};
  double outlier_k_sd = 3.0;
  double segment_len_s = 30.0;
  bool zero_phase = false;
};

// Outlier replacement, band-pass, then band-stop.
std::vector<double> preprocess_channel(std::span<const double> samples, double sample_rate_hz,
                                       const PreprocessConfig &config);

// Subtracts the mean in place.
void remove_mean(std::vector<double> &samples);

}  // namespace wmf
