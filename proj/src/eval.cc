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

#include "wmfatigue/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "wmfatigue/error.hpp"
#include "wmfatigue/io.hpp"
#include "wmfatigue/trend.hpp"

namespace wmf {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kControlSeedOffset = 100000;

Json nullable(const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); }

std::string pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::optional<double> mean_of(const std::vector<double> &v) {
  if (v.empty()) return std::nullopt;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

std::string format_fraction(std::size_t k, std::size_t n) {
  if (n == 0) return "-";
  const double pct = 100.0 * static_cast<double>(k) / static_cast<double>(n);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", pct);
  std::string p(buf);
  if (p.size() > 2 && p.compare(p.size() - 2, 2, ".0") == 0) p.resize(p.size() - 2);
  return std::to_string(k) + "/" + std::to_string(n) + " (" + p + "%)";
}

ComparisonReport aggregate_rows(std::vector<SubjectRow> rows) {
  if (rows.empty()) throw Error("empty cohort");
  ComparisonReport r;
  std::vector<double> leads;
  for (const auto &row : rows) {
    if (row.wm_detected != row.wm_time_s.has_value() || row.th_detected != row.th_time_s.has_value()) {
      throw Error("subject " + row.id + ": detection flag and time disagree");
    }
    const bool dual = row.wm_detected && row.th_detected;
    if (dual != row.p_c.has_value()) throw Error("subject " + row.id + ": P_c only for dual detections");
    if (row.wm_detected) ++r.wm_count;
    if (row.th_detected) ++r.th_count;
    if (dual) {
      ++r.dual_count;
      if (*row.p_c == 1) ++r.pc_positive_count;
      leads.push_back(*row.th_time_s - *row.wm_time_s);
    }
  }
  const double n = static_cast<double>(rows.size());
  r.case1_wm = static_cast<double>(r.wm_count) / n;
  r.case1_th = static_cast<double>(r.th_count) / n;
  if (r.dual_count > 0) {
    r.case2_pc_positive = static_cast<double>(r.pc_positive_count) / static_cast<double>(r.dual_count);
  }
  r.mean_lead_time_s = mean_of(leads);
  r.rows = std::move(rows);
  return r;
}

ComparisonReport compare_detectors(std::span<const CohortMember> cohort, const WMParams &params,
                                   double theta_hz) {
  if (cohort.empty()) throw Error("empty cohort");
  std::vector<SubjectRow> rows;
  rows.reserve(cohort.size());
  for (const auto &member : cohort) {
    const auto wm = detect_wm(member.trajectory, params);
    const auto th = detect_threshold(member.trajectory, theta_hz, params.baseline_window_s);
    SubjectRow row;
    row.id = member.id;
    row.wm_detected = wm.detected;
    row.wm_time_s = wm.time_s;
    row.th_detected = th.detected;
    row.th_time_s = th.time_s;
    if (wm.detected && th.detected) row.p_c = case2_index(wm, th);
    rows.push_back(std::move(row));
  }
  return aggregate_rows(std::move(rows));
}

std::string report_json(const ComparisonReport &report, const WMParams &params, double theta_hz) {
  Json doc;
  doc["params"] = {{"delta_r", params.delta_r},
                   {"f_th_hz", params.f_th_hz},
                   {"wm_th", params.wm_th},
                   {"baseline_window_s", params.baseline_window_s},
                   {"bound_mode", to_string(params.bound_mode)},
                   {"window_mode", to_string(params.window_mode)},
                   {"theta_hz", theta_hz}};
  Json rows = Json::array();
  for (const auto &r : report.rows) {
    Json row;
    row["subject"] = r.id;
    row["wm_detected"] = r.wm_detected;
    row["wm_time_s"] = nullable(r.wm_time_s);
    row["th_detected"] = r.th_detected;
    row["th_time_s"] = nullable(r.th_time_s);
    row["p_c"] = r.p_c ? Json(*r.p_c) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  doc["subjects"] = std::move(rows);
  doc["aggregates"] = {{"n", report.rows.size()},
                       {"case1_wm", report.case1_wm},
                       {"case1_th", report.case1_th},
                       {"dual_detections", report.dual_count},
                       {"case2_pc_positive", nullable(report.case2_pc_positive)},
                       {"mean_lead_time_s", nullable(report.mean_lead_time_s)}};
  return doc.dump(2) + "\n";
}

std::string report_table(const ComparisonReport &report, const std::string &title) {
  const std::size_t n = report.rows.size();
  const std::size_t w0 = std::max<std::size_t>(title.size() + 2, 14);
  std::ostringstream out;
  out << pad("Experiment", w0) << pad("Categories", 16) << pad("WM-based method", 18)
      << "Conventional method\n";
  out << pad(title, w0) << pad("Case 1", 16) << pad(format_fraction(report.wm_count, n), 18)
      << format_fraction(report.th_count, n) << "\n";
  out << pad("", w0) << pad("Case 2 P_c=1", 16)
      << pad(format_fraction(report.pc_positive_count, report.dual_count), 18) << "-\n";
  return out.str();
}

CohortSpec load_cohort_spec(const std::filesystem::path &path) {
  CohortSpec cohort;
  for (const auto &kv : read_key_values(path)) {
    try {
      if (kv.key == "cohort.size") {
        const long long n = parse_int_value(kv.key, kv.value);
        if (n < 1) throw ConfigError("cohort.size must be positive");
        cohort.size = static_cast<std::size_t>(n);
      } else if (kv.key == "cohort.band_index") {
        cohort.band_index = static_cast<int>(parse_int_value(kv.key, kv.value));
      } else if (kv.key == "cohort.channel") {
        cohort.channel = kv.value;
      } else {
        apply_synth_key(cohort.subject, kv.key, kv.value);
      }
    } catch (const ConfigError &e) {
      throw ConfigError(path.string() + ": line " + std::to_string(kv.line) + ": " + e.what());
    }
  }
  try {
    cohort.subject.validate();
  } catch (const Error &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return cohort;
}

std::vector<CohortMember> synth_cohort(const CohortSpec &cohort, const FeatureConfig &config) {
  if (cohort.size == 0) throw Error("empty cohort");
  std::vector<CohortMember> members;
  members.reserve(cohort.size);
  for (std::size_t i = 0; i < cohort.size; ++i) {
    SynthSpec spec = cohort.subject;
    spec.seed = cohort.subject.seed + i;
    const SignalRecording rec = synth_emg(spec);
    char id[16];
    std::snprintf(id, sizeof(id), "S%02zu", i + 1);
    CohortMember m;
    m.id = id;
    m.trajectory = feature_trajectory(rec, cohort.channel, cohort.band_index, config);
    members.push_back(std::move(m));
  }
  return members;
}

CohortSpec no_drift_control(const CohortSpec &cohort) {
  CohortSpec control = cohort;
  const double start = cohort.subject.drift_breakpoints.empty()
                           ? cohort.subject.mdf_start_hz
                           : cohort.subject.drift_breakpoints.front().mdf_hz;
  control.subject.drift_breakpoints.clear();
  control.subject.mdf_start_hz = start;
  control.subject.mdf_end_hz = start;
  control.subject.seed = cohort.subject.seed + kControlSeedOffset;
  return control;
}

SweepGrid load_sweep_grid(const std::filesystem::path &path) {
  SweepGrid grid;
  for (const auto &kv : read_key_values(path)) {
    try {
      auto values = parse_double_list(kv.key, kv.value);
      if (kv.key == "delta_r") {
        grid.delta_r = std::move(values);
      } else if (kv.key == "f_th_hz") {
        grid.f_th_hz = std::move(values);
      } else if (kv.key == "wm_th") {
        grid.wm_th = std::move(values);
      } else if (kv.key == "snr_db") {
        grid.snr_db = std::move(values);
      } else {
        throw ConfigError("unknown grid key '" + kv.key + "'");
      }
    } catch (const ConfigError &e) {
      throw ConfigError(path.string() + ": line " + std::to_string(kv.line) + ": " + e.what());
    }
  }
  return grid;
}

std::vector<SweepRow> sweep_trajectories(const SweepGrid &grid, double snr_db,
                                         std::span<const CohortMember> drift,
                                         std::span<const CohortMember> control,
                                         const WMParams &base) {
  if (drift.empty() || control.empty()) throw Error("sweep: empty cohort");
  std::vector<SweepRow> rows;
  for (double delta_r : grid.delta_r) {
    for (double f_th : grid.f_th_hz) {
      for (double wm_th : grid.wm_th) {
        WMParams p = base;
        p.delta_r = delta_r;
        p.f_th_hz = f_th;
        p.wm_th = wm_th;
        p.validate();

        SweepRow row;
        row.delta_r = delta_r;
        row.f_th_hz = f_th;
        row.wm_th = wm_th;
        row.snr_db = snr_db;
        std::vector<double> wm_times, th_times;
        for (const auto &m : drift) {
          const auto wm = detect_wm(m.trajectory, p);
          const auto th = detect_threshold(m.trajectory, f_th, p.baseline_window_s);
          if (wm.detected) wm_times.push_back(*wm.time_s);
          if (th.detected) th_times.push_back(*th.time_s);
        }
        std::size_t wm_alarms = 0, th_alarms = 0;
        for (const auto &m : control) {
          if (detect_wm(m.trajectory, p).detected) ++wm_alarms;
          if (detect_threshold(m.trajectory, f_th, p.baseline_window_s).detected) ++th_alarms;
        }
        const double nd = static_cast<double>(drift.size());
        const double nc = static_cast<double>(control.size());
        row.detection_rate = static_cast<double>(wm_times.size()) / nd;
        row.false_alarm_rate = static_cast<double>(wm_alarms) / nc;
        row.mean_detection_time_s = mean_of(wm_times);
        row.th_detection_rate = static_cast<double>(th_times.size()) / nd;
        row.th_false_alarm_rate = static_cast<double>(th_alarms) / nc;
        row.th_mean_detection_time_s = mean_of(th_times);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::vector<SweepRow> sweep(const SweepGrid &grid, const CohortSpec &cohort,
                            const FeatureConfig &config, const WMParams &base) {
  if (grid.delta_r.empty() || grid.f_th_hz.empty() || grid.wm_th.empty() || grid.snr_db.empty()) {
    throw Error("sweep: every grid axis needs at least one value");
  }
  std::vector<SweepRow> rows;
  for (double snr : grid.snr_db) {
    CohortSpec drift_spec = cohort;
    drift_spec.subject.noise_snr_db = snr;
    CohortSpec control_spec = no_drift_control(drift_spec);
    const auto drift = synth_cohort(drift_spec, config);
    const auto control = synth_cohort(control_spec, config);
    auto part = sweep_trajectories(grid, snr, drift, control, base);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  auto opt = [](const std::optional<double> &v) { return v ? format_double(*v) : std::string(); };
  std::string out =
      "delta_r,f_th_hz,wm_th,snr_db,detection_rate,false_alarm_rate,mean_detection_time_s,"
      "th_detection_rate,th_false_alarm_rate,th_mean_detection_time_s\n";
  for (const auto &r : rows) {
    out += format_double(r.delta_r) + "," + format_double(r.f_th_hz) + "," + format_double(r.wm_th) +
           "," + format_double(r.snr_db) + "," + format_double(r.detection_rate) + "," +
           format_double(r.false_alarm_rate) + "," + opt(r.mean_detection_time_s) + "," +
           format_double(r.th_detection_rate) + "," + format_double(r.th_false_alarm_rate) + "," +
           opt(r.th_mean_detection_time_s) + "\n";
  }
  return out;
}

}  // namespace wmf
