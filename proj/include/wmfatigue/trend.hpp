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

#include "wmfatigue/types.hpp"

namespace wmf {

// Mean median frequency (F_int) over the points with T_j <= window_s.
double baseline_mmf(const FeatureTrajectory &trajectory, double window_s);

// True when `current` stays within the weak-monotonicity bound of `previous`,
// i.e. current <= previous + delta where delta = delta_r * previous
// (relative) or the fixed delta_abs_hz (absolute). Equality counts as
// weakly decreasing.
bool weakly_decreasing(double previous, double current, const WMParams &params);

// Weak-monotonicity value of a sequence with the relative bound:
// (s_plus - s_minus) / (n - 1), where s_minus counts transitions that satisfy
// the bound and s_plus those that do not. In [-1, 1]; -1 means every step is
// weakly decreasing. Throws for n < 2 or delta_r < 0.
double wm_value(std::span<const double> f_values, double delta_r);

// Same statistic using the bound mode carried by `params`.
double wm_value(std::span<const double> f_values, const WMParams &params);

// WM-based detector. F_int is the baseline MMF; WM(T_j) is evaluated over
// the window selected by params.window_mode ending at T_j. Fires at the first
// T_j after the baseline window with
//   F(T_j) (1 - delta_r) <= F_int - F_th   and   WM(T_j) <= WM_th.
DetectionResult detect_wm(const FeatureTrajectory &trajectory, const WMParams &params = {});

// Conventional detector: fires at the first T_j after the baseline window
// with F_int - F(T_j) >= theta. No debouncing.
DetectionResult detect_threshold(const FeatureTrajectory &trajectory, double theta_hz = 1.25,
                                 double baseline_window_s = 60.0);

// Lead-time index for dual detections: +1 if t_wm < t_th, else -1.
int case2_index(double t_wm_s, double t_th_s);
// Throws when either detector did not fire.
int case2_index(const DetectionResult &wm, const DetectionResult &threshold);

}  // namespace wmf
