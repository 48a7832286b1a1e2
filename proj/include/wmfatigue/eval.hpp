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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wmfatigue/features.hpp"
#include "wmfatigue/synth.hpp"
#include "wmfatigue/types.hpp"

namespace wmf {

struct CohortMember {
  std::string id;
  FeatureTrajectory trajectory;
};

struct SubjectRow {
  std::string id;
  bool wm_detected = false;
  std::optional<double> wm_time_s;
  bool th_detected = false;
  std::optional<double> th_time_s;
  std::optional<int> p_c;  // present iff both detectors fired
};

// Case 1: detection fraction per method. Case 2: share of dual detections
// where the WM detector fired strictly first. Lead time is t_th - t_wm
// averaged over dual detections.
struct ComparisonReport {
  std::vector<SubjectRow> rows;
  std::size_t wm_count = 0;
  std::size_t th_count = 0;
  std::size_t dual_count = 0;
  std::size_t pc_positive_count = 0;
  double case1_wm = 0.0;
  double case1_th = 0.0;
  std::optional<double> case2_pc_positive;
  std::optional<double> mean_lead_time_s;
};

// Recomputes every aggregate from the rows. Throws for an empty row set or
// rows whose p_c disagrees with their detection flags.
ComparisonReport aggregate_rows(std::vector<SubjectRow> rows);

ComparisonReport compare_detectors(std::span<const CohortMember> cohort, const WMParams &params,
                                   double theta_hz);

std::string report_json(const ComparisonReport &report, const WMParams &params, double theta_hz);

// Two-method comparison table: Case 1 counts for both methods and the
// Case 2 P_c = 1 share for the WM method, e.g. `14/15 (93.3%)`.
std::string report_table(const ComparisonReport &report, const std::string &title = "Synthetic");

// `k/n (p%)` with one decimal, trailing `.0` dropped.
std::string format_fraction(std::size_t k, std::size_t n);

// Cohort of synthetic subjects: subject i uses seed `subject.seed + i`.
struct CohortSpec {
  SynthSpec subject;
  std::size_t size = 20;
  int band_index = 5;
  std::string channel = "ch1";
};

CohortSpec load_cohort_spec(const std::filesystem::path &path);

std::vector<CohortMember> synth_cohort(const CohortSpec &cohort, const FeatureConfig &config);

// The same cohort with the drift removed (constant MDF at the starting
// value) and an independent seed range.
CohortSpec no_drift_control(const CohortSpec &cohort);

struct SweepGrid {
  std::vector<double> delta_r;
  std::vector<double> f_th_hz;
  std::vector<double> wm_th;
  std::vector<double> snr_db;
};

SweepGrid load_sweep_grid(const std::filesystem::path &path);

struct SweepRow {
  double delta_r = 0.0;
  double f_th_hz = 0.0;
  double wm_th = 0.0;
  double snr_db = 0.0;
  double detection_rate = 0.0;
  double false_alarm_rate = 0.0;
  std::optional<double> mean_detection_time_s;
  double th_detection_rate = 0.0;
  double th_false_alarm_rate = 0.0;
  std::optional<double> th_mean_detection_time_s;
};

// For every noise level a drift cohort and its no-drift control are
// generated once; every (delta_r, f_th, wm_th) combination is then scored on
// them. The threshold detector uses theta = f_th.
std::vector<SweepRow> sweep(const SweepGrid &grid, const CohortSpec &cohort,
                            const FeatureConfig &config, const WMParams &base);

// Pre-computed cohorts keyed by SNR, for callers that already have them.
std::vector<SweepRow> sweep_trajectories(const SweepGrid &grid, double snr_db,
                                         std::span<const CohortMember> drift,
                                         std::span<const CohortMember> control,
                                         const WMParams &base);

std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace wmf
