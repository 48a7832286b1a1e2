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

#include <cmath>

#include "wmfatigue/error.hpp"
#include "wmfatigue/types.hpp"

namespace wmf {

const Channel &SignalRecording::channel(const std::string &label) const {
  for (const auto &ch : channels) {
    if (ch.label == label) return ch;
  }
  throw Error("no channel named '" + label + "'");
}

void SignalRecording::validate() const {
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz)) {
    throw Error("sample rate must be positive");
  }
  if (channels.empty()) throw Error("recording has no channels");
  const std::size_t n = channels.front().samples.size();
  if (n < 2) throw Error("recording needs at least 2 samples");
  for (const auto &ch : channels) {
    if (ch.samples.size() != n) throw Error("channel '" + ch.label + "' has a different length");
    for (double x : ch.samples) {
      if (!std::isfinite(x)) throw Error("channel '" + ch.label + "' has non-finite samples");
    }
  }
}

void AnnotationTrack::validate() const {
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].score < 0 || events[i].score > 2) throw Error("annotation score out of range");
    if (i > 0 && events[i].time_s <= events[i - 1].time_s) {
      throw Error("annotation times must be strictly increasing");
    }
  }
}

std::vector<double> FeatureTrajectory::values() const {
  std::vector<double> v;
  v.reserve(points.size());
  for (const auto &p : points) v.push_back(p.f_hz);
  return v;
}

void FeatureTrajectory::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].t_s) || !std::isfinite(points[i].f_hz)) {
      throw Error("trajectory has non-finite values");
    }
    if (i > 0 && points[i].t_s <= points[i - 1].t_s) {
      throw Error("trajectory times must be strictly increasing");
    }
  }
}

void WMParams::validate() const {
  if (!(delta_r >= 0.0) || !(delta_r < 1.0)) throw Error("wm.delta_r must be in [0, 1)");
  if (!(f_th_hz > 0.0)) throw Error("wm.f_th_hz must be positive");
  if (!(wm_th >= -1.0 && wm_th <= 0.0)) throw Error("wm.wm_th must be in [-1, 0]");
  if (!(baseline_window_s > 0.0)) throw Error("wm.baseline_window_s must be positive");
  if (!(delta_abs_hz >= 0.0)) throw Error("wm.delta_abs_hz must be non-negative");
  if (window_len < 2) throw Error("wm.window_len must be at least 2");
}

const char *to_string(DetectorKind kind) {
  return kind == DetectorKind::kWm ? "wm" : "threshold";
}

const char *to_string(BoundMode mode) {
  return mode == BoundMode::kRelative ? "relative" : "absolute";
}

const char *to_string(WindowMode mode) {
  return mode == WindowMode::kCumulative ? "cumulative" : "sliding";
}

}  // namespace wmf
