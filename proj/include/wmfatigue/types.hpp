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
#include <optional>
#include <string>
#include <vector>

namespace wmf {

struct Channel {
  std::string label;
  std::vector<double> samples;
};

// Uniformly sampled multichannel time series. All channels share one length.
struct SignalRecording {
  double sample_rate_hz = 0.0;
  std::vector<Channel> channels;

  std::size_t num_samples() const {
    return channels.empty() ? 0 : channels.front().samples.size();
  }
  double duration_s() const {
    return sample_rate_hz > 0.0 ? static_cast<double>(num_samples()) / sample_rate_hz : 0.0;
  }

  // Throws wmf::Error when the channel does not exist.
  const Channel &channel(const std::string &label) const;

  // Throws wmf::Error when an invariant is violated (rate, lengths, finiteness).
  void validate() const;
};

// Optional expert stiffness scores (0 = none, 1 = moderate, 2 = hard).
struct AnnotationEvent {
  double time_s = 0.0;
  int score = 0;
};

struct AnnotationTrack {
  std::vector<AnnotationEvent> events;
  void validate() const;
};

// One point J(T_j): segment end time and the feature value (median frequency).
struct TrajectoryPoint {
  double t_s = 0.0;
  double f_hz = 0.0;
};

struct FeatureTrajectory {
  std::vector<TrajectoryPoint> points;
  int band_index = 0;  // 1-based; 0 when unknown (e.g. loaded from CSV)
  std::string channel;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  std::vector<double> values() const;
  void validate() const;
};

enum class BoundMode { kRelative, kAbsolute };
enum class WindowMode { kCumulative, kSliding };

struct WMParams {
  double delta_r = 0.0083;
  double f_th_hz = 1.25;
  double wm_th = -0.5;
  double baseline_window_s = 60.0;
  BoundMode bound_mode = BoundMode::kRelative;
  // Fluctuation bound in Hz, only used with BoundMode::kAbsolute.
  double delta_abs_hz = 0.5;
  WindowMode window_mode = WindowMode::kCumulative;
  std::size_t window_len = 10;  // points, sliding mode only

  void validate() const;
};

enum class DetectorKind { kWm, kThreshold };

const char *to_string(DetectorKind kind);
const char *to_string(BoundMode mode);
const char *to_string(WindowMode mode);

struct WmTracePoint {
  double t_s = 0.0;
  double wm = 0.0;
};

struct ConditionFlags {
  double t_s = 0.0;
  bool eligible = false;        // strictly after the baseline window
  bool cond_freq = false;
  std::optional<bool> cond_wm;  // absent for the threshold detector
};

struct DetectionResult {
  DetectorKind detector = DetectorKind::kWm;
  bool detected = false;
  std::optional<double> time_s;
  std::vector<WmTracePoint> wm_trace;
  std::vector<ConditionFlags> condition_trace;
  double f_int_hz = 0.0;
  // Parameters the detector ran with. For the threshold detector only
  // f_th_hz (the decline threshold) and baseline_window_s are meaningful.
  WMParams params;
};

}  // namespace wmf
