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

#include "wmfatigue/trend.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "wmfatigue/error.hpp"

namespace wmf {

namespace {

double wm_from_counts(std::size_t s_plus, std::size_t s_minus) {
  const double steps = static_cast<double>(s_plus + s_minus);
  return static_cast<double>(s_plus) / steps - static_cast<double>(s_minus) / steps;
}

void check_detector_input(const FeatureTrajectory &trajectory, double baseline_window_s) {
  trajectory.validate();
  if (trajectory.size() < 3) throw Error("detector needs at least 3 trajectory points");
  if (!(trajectory.points.back().t_s > baseline_window_s)) {
    throw Error("trajectory does not extend beyond the baseline window");
  }
}

}  // namespace

double baseline_mmf(const FeatureTrajectory &trajectory, double window_s) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto &p : trajectory.points) {
    if (p.t_s <= window_s) {
      sum += p.f_hz;
      ++count;
    }
  }
  if (count == 0) {
    throw Error("no trajectory points within the baseline window (" + std::to_string(window_s) +
                " s)");
  }
  return sum / static_cast<double>(count);
}

bool weakly_decreasing(double previous, double current, const WMParams &params) {
  const double delta =
      params.bound_mode == BoundMode::kRelative ? params.delta_r * previous : params.delta_abs_hz;
  return current <= previous + delta;
}

double wm_value(std::span<const double> f_values, const WMParams &params) {
  if (f_values.size() < 2) throw Error("wm_value needs at least 2 values");
  if (!(params.delta_r >= 0.0)) throw Error("wm_value: delta_r must be non-negative");
  std::size_t s_minus = 0;
  for (std::size_t j = 1; j < f_values.size(); ++j) {
    if (weakly_decreasing(f_values[j - 1], f_values[j], params)) ++s_minus;
  }
  return wm_from_counts(f_values.size() - 1 - s_minus, s_minus);
}

double wm_value(std::span<const double> f_values, double delta_r) {
  WMParams params;
  params.delta_r = delta_r;
  params.bound_mode = BoundMode::kRelative;
  return wm_value(f_values, params);
}

DetectionResult detect_wm(const FeatureTrajectory &trajectory, const WMParams &params) {
  params.validate();
  check_detector_input(trajectory, params.baseline_window_s);

  DetectionResult result;
  result.detector = DetectorKind::kWm;
  result.params = params;
  result.f_int_hz = baseline_mmf(trajectory, params.baseline_window_s);

  const auto &pts = trajectory.points;
  // minus_prefix[j]: weakly decreasing transitions among steps 1..j.
  std::vector<std::size_t> minus_prefix(pts.size(), 0);
  for (std::size_t j = 1; j < pts.size(); ++j) {
    minus_prefix[j] =
        minus_prefix[j - 1] + (weakly_decreasing(pts[j - 1].f_hz, pts[j].f_hz, params) ? 1 : 0);
  }

  for (std::size_t j = 0; j < pts.size(); ++j) {
    ConditionFlags flags;
    flags.t_s = pts[j].t_s;
    flags.eligible = pts[j].t_s > params.baseline_window_s;
    // Written as a decline so that it is implied by the threshold detector's
    // condition in floating point as well.
    flags.cond_freq = result.f_int_hz - pts[j].f_hz * (1.0 - params.delta_r) >= params.f_th_hz;

    std::optional<double> wm;
    if (j >= 1) {
      std::size_t first = 0;
      if (params.window_mode == WindowMode::kSliding && j + 1 > params.window_len) {
        first = j + 1 - params.window_len;
      }
      const std::size_t steps = j - first;
      const std::size_t s_minus = minus_prefix[j] - minus_prefix[first];
      wm = wm_from_counts(steps - s_minus, s_minus);
      result.wm_trace.push_back({pts[j].t_s, *wm});
    }
    flags.cond_wm = wm.has_value() && *wm <= params.wm_th;

    if (!result.detected && flags.eligible && flags.cond_freq && *flags.cond_wm) {
      result.detected = true;
      result.time_s = pts[j].t_s;
    }
    result.condition_trace.push_back(flags);
  }
  return result;
}

DetectionResult detect_threshold(const FeatureTrajectory &trajectory, double theta_hz,
                                 double baseline_window_s) {
  if (!(theta_hz > 0.0)) throw Error("threshold detector: theta must be positive");
  if (!(baseline_window_s > 0.0)) throw Error("threshold detector: baseline window must be positive");
  check_detector_input(trajectory, baseline_window_s);

  DetectionResult result;
  result.detector = DetectorKind::kThreshold;
  result.params.f_th_hz = theta_hz;
  result.params.baseline_window_s = baseline_window_s;
  result.f_int_hz = baseline_mmf(trajectory, baseline_window_s);

  for (const auto &p : trajectory.points) {
    ConditionFlags flags;
    flags.t_s = p.t_s;
    flags.eligible = p.t_s > baseline_window_s;
    flags.cond_freq = result.f_int_hz - p.f_hz >= theta_hz;
    if (!result.detected && flags.eligible && flags.cond_freq) {
      result.detected = true;
      result.time_s = p.t_s;
    }
    result.condition_trace.push_back(flags);
  }
  return result;
}

int case2_index(double t_wm_s, double t_th_s) { return t_wm_s < t_th_s ? 1 : -1; }

int case2_index(const DetectionResult &wm, const DetectionResult &threshold) {
  if (!wm.detected || !wm.time_s || !threshold.detected || !threshold.time_s) {
    throw Error("case 2 index needs both detectors to fire");
  }
  return case2_index(*wm.time_s, *threshold.time_s);
}

}  // namespace wmf
