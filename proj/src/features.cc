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

#include "wmfatigue/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wmfatigue/error.hpp"

namespace wmf {

double segment_feature(std::span<const double> segment, double sample_rate_hz, int band_index,
                       const FeatureConfig &config) {
  std::vector<double> x(segment.begin(), segment.end());
  remove_mean(x);
  const auto band = extract_band(x, config.wavelet, config.depth, band_index);
  return median_frequency(band, sample_rate_hz, config.mdf);
}

FeatureTrajectory trajectory_from_samples(std::span<const double> samples, double sample_rate_hz,
                                          int band_index, const FeatureConfig &config) {
  const int count = 1 << config.depth;
  if (band_index < 1 || band_index > count) {
    throw Error("band index must be in [1, " + std::to_string(count) + "]");
  }
  const auto clean = preprocess_channel(samples, sample_rate_hz, config.preprocess);
  const auto segments = segment(clean, sample_rate_hz, config.preprocess.segment_len_s);

  FeatureTrajectory traj;
  traj.band_index = band_index;
  traj.points.reserve(segments.size());
  for (std::size_t j = 0; j < segments.size(); ++j) {
    const double f = segment_feature(segments.segments[j].samples, sample_rate_hz, band_index, config);
    traj.points.push_back({segments.end_time(j), f});
  }
  return traj;
}

FeatureTrajectory feature_trajectory(const SignalRecording &recording, const std::string &channel,
                                     int band_index, const FeatureConfig &config) {
  recording.validate();
  const Channel &ch = recording.channel(channel);
  FeatureTrajectory traj =
      trajectory_from_samples(ch.samples, recording.sample_rate_hz, band_index, config);
  traj.channel = channel;
  return traj;
}

std::vector<std::vector<std::size_t>> probe_segments(std::size_t segment_count,
                                                     double segment_len_s,
                                                     std::span<const double> probe_minutes) {
  std::vector<std::vector<std::size_t>> groups;
  for (double minute : probe_minutes) {
    if (!(minute >= 1.0)) throw Error("probe minutes are 1-based");
    const double lo = 60.0 * (minute - 1.0);
    const double hi = 60.0 * minute;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < segment_count; ++j) {
      const double start = static_cast<double>(j) * segment_len_s;
      const double end = start + segment_len_s;
      if (std::min(end, hi) - std::max(start, lo) > 1e-9) members.push_back(j);
    }
    groups.push_back(std::move(members));
  }
  return groups;
}

std::vector<int> candidate_bands(double sample_rate_hz, const FeatureConfig &config) {
  const double width = band_width_hz(sample_rate_hz, config.depth);
  const double lo = config.mdf.f_lo_hz;
  const double hi = config.mdf.f_hi_hz > 0.0 ? config.mdf.f_hi_hz : sample_rate_hz / 2.0;
  std::vector<int> bands;
  for (int b = 1; b <= (1 << config.depth); ++b) {
    const double band_lo = (b - 1) * width;
    const double band_hi = b * width;
    if (band_hi > lo && band_lo < hi) bands.push_back(b);
  }
  return bands;
}

std::vector<BandGroups> probe_band_groups(const SignalRecording &recording,
                                          const std::vector<std::string> &channels,
                                          const FeatureConfig &config,
                                          std::span<const double> probe_minutes) {
  recording.validate();
  std::vector<std::string> labels = channels;
  if (labels.empty()) {
    for (const auto &ch : recording.channels) labels.push_back(ch.label);
  }
  const double fs = recording.sample_rate_hz;
  const auto bands = candidate_bands(fs, config);

  std::vector<BandGroups> out;
  for (const auto &label : labels) {
    const auto clean = preprocess_channel(recording.channel(label).samples, fs, config.preprocess);
    const auto segments = segment(clean, fs, config.preprocess.segment_len_s);
    const auto probes = probe_segments(segments.size(), segments.segment_len_s, probe_minutes);

    std::vector<BandGroups> per_band(bands.size());
    for (std::size_t b = 0; b < bands.size(); ++b) {
      per_band[b].channel = label;
      per_band[b].band_index = bands[b];
      per_band[b].groups.resize(probes.size());
    }
    for (std::size_t p = 0; p < probes.size(); ++p) {
      for (std::size_t j : probes[p]) {
        std::vector<double> x = segments.segments[j].samples;
        remove_mean(x);
        const BandSet set = wavelet_packet_decompose(x, config.wavelet, config.depth, fs);
        for (std::size_t b = 0; b < bands.size(); ++b) {
          per_band[b].groups[p].push_back(
              median_frequency(set.bands[bands[b] - 1], fs, config.mdf));
        }
      }
    }
    for (auto &g : per_band) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace wmf
