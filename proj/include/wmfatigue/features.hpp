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
#include <string>
#include <vector>

#include "wmfatigue/anova.hpp"
#include "wmfatigue/preprocess.hpp"
#include "wmfatigue/psd.hpp"
#include "wmfatigue/types.hpp"
#include "wmfatigue/wavelet.hpp"

namespace wmf {

struct FeatureConfig {
  PreprocessConfig preprocess;
  Wavelet wavelet = Wavelet::kDb14;
  int depth = 6;
  MdfOptions mdf{WelchOptions{1.0, 0.5}, 10.0, 150.0};
};

// Median frequency of one segment: mean removal, band extraction, Welch MDF.
double segment_feature(std::span<const double> segment, double sample_rate_hz, int band_index,
                       const FeatureConfig &config);

// Full chain on raw samples: preprocess -> segment -> per-segment feature.
// One point per segment, T_j = segment end time.
FeatureTrajectory trajectory_from_samples(std::span<const double> samples, double sample_rate_hz,
                                          int band_index, const FeatureConfig &config);

FeatureTrajectory feature_trajectory(const SignalRecording &recording, const std::string &channel,
                                     int band_index, const FeatureConfig &config);

// Indices of the segments that overlap each probe minute (1-based minute m
// covers [60(m-1), 60m) s). With 30 s segments each probe pools two segments.
std::vector<std::vector<std::size_t>> probe_segments(std::size_t segment_count,
                                                     double segment_len_s,
                                                     std::span<const double> probe_minutes);

// Bands (1-based) whose frequency extent overlaps the MDF range of the config.
std::vector<int> candidate_bands(double sample_rate_hz, const FeatureConfig &config);

// MDF observations at the probe minutes for every candidate band of every
// listed channel (all channels when `channels` is empty).
std::vector<BandGroups> probe_band_groups(const SignalRecording &recording,
                                          const std::vector<std::string> &channels,
                                          const FeatureConfig &config,
                                          std::span<const double> probe_minutes);

}  // namespace wmf
