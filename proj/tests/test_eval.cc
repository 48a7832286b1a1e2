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

#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "wmfatigue/error.hpp"
#include "wmfatigue/eval.hpp"
#include "wmfatigue/trend.hpp"

using namespace wmf;

namespace {

CohortMember member(const std::string &id, const std::vector<double> &f) {
  CohortMember m;
  m.id = id;
  for (std::size_t i = 0; i < f.size(); ++i) m.trajectory.points.push_back({30.0 * (i + 1), f[i]});
  return m;
}

SubjectRow row(bool wm, double t_wm, bool th, double t_th) {
  SubjectRow r;
  r.wm_detected = wm;
  if (wm) r.wm_time_s = t_wm;
  r.th_detected = th;
  if (th) r.th_time_s = t_th;
  if (wm && th) r.p_c = case2_index(t_wm, t_th);
  return r;
}

}  // namespace

TEST_CASE("format_fraction") {
  CHECK(format_fraction(14, 15) == "14/15 (93.3%)");
  CHECK(format_fraction(6, 15) == "6/15 (40%)");
  CHECK(format_fraction(5, 6) == "5/6 (83.3%)");
  CHECK(format_fraction(1, 6) == "1/6 (16.7%)");
  CHECK(format_fraction(0, 0) == "-");
}

TEST_CASE("table format on a fifteen-subject outcome") {
  std::vector<SubjectRow> rows;
  for (int i = 0; i < 5; ++i) rows.push_back(row(true, 240, true, 390));
  rows.push_back(row(true, 400, true, 350));
  for (int i = 0; i < 8; ++i) rows.push_back(row(true, 300, false, 0));
  rows.push_back(row(false, 0, false, 0));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].id = "S" + std::to_string(i + 1);
  const auto r = aggregate_rows(rows);
  CHECK(r.wm_count == 14);
  CHECK(r.th_count == 6);
  CHECK(r.dual_count == 6);
  CHECK(r.pc_positive_count == 5);
  CHECK(*r.case2_pc_positive == doctest::Approx(5.0 / 6.0));
  CHECK(*r.mean_lead_time_s == doctest::Approx((5 * 150.0 - 50.0) / 6.0));
  const auto table = report_table(r, "Experiment 1");
  CHECK(table.find("14/15 (93.3%)") != std::string::npos);
  CHECK(table.find("6/15 (40%)") != std::string::npos);
  CHECK(table.find("5/6 (83.3%)") != std::string::npos);
}

TEST_CASE("aggregate consistency checks") {
  CHECK_THROWS_AS(aggregate_rows({}), Error);
  auto bad = row(true, 100, true, 200);
  bad.p_c.reset();
  CHECK_THROWS_AS(aggregate_rows({bad}), Error);
  auto bad2 = row(true, 100, false, 0);
  bad2.p_c = 1;
  CHECK_THROWS_AS(aggregate_rows({bad2}), Error);
  auto bad3 = row(false, 0, false, 0);
  bad3.wm_time_s = 3.0;
  CHECK_THROWS_AS(aggregate_rows({bad3}), Error);
}

TEST_CASE("compare_detectors") {
  // WM fires at 39.0 (150 s); the threshold needs 38.75 (180 s).
  const std::vector<CohortMember> cohort = {
      member("a", {40, 40, 39.8, 39.5, 39.0, 38.7}),
      member("b", {40, 40, 39.7, 39.4, 39.0, 38.5, 38.0}),
  };
  const auto r = compare_detectors(cohort, WMParams{}, 1.25);
  CHECK(r.case1_wm == 1.0);
  CHECK(r.case1_th == 1.0);
  CHECK(*r.case2_pc_positive == 1.0);
  CHECK(*r.mean_lead_time_s == 30.0);
  CHECK_THROWS_AS(compare_detectors(std::vector<CohortMember>{}, WMParams{}, 1.25), Error);

  const std::vector<CohortMember> flat = {member("c", std::vector<double>(10, 40.0))};
  const auto f = compare_detectors(flat, WMParams{}, 1.25);
  CHECK(f.case1_wm == 0.0);
  CHECK_FALSE(f.case2_pc_positive.has_value());
  CHECK_FALSE(f.mean_lead_time_s.has_value());
}

TEST_CASE("report json") {
  const std::vector<CohortMember> cohort = {member("a", {40, 40, 39.8, 39.5, 39.0, 38.7}),
                                            member("b", std::vector<double>(8, 40.0))};
  const auto r = compare_detectors(cohort, WMParams{}, 1.25);
  const auto text = report_json(r, WMParams{}, 1.25);
  CHECK(text == report_json(compare_detectors(cohort, WMParams{}, 1.25), WMParams{}, 1.25));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["subjects"].size() == 2);
  CHECK(j["subjects"][0]["p_c"] == 1);
  CHECK(j["subjects"][1]["p_c"].is_null());
  CHECK(j["aggregates"]["case1_wm"] == 0.5);
  CHECK(j["params"]["theta_hz"] == 1.25);
}

TEST_CASE("cohort and grid files") {
  const auto dir = testing::scratch_dir("eval_files");
  std::ofstream(dir / "c.cfg") << "cohort.size = 3\ncohort.band_index = 4\nduration_s = 120\nseed = 5\n";
  const auto c = load_cohort_spec(dir / "c.cfg");
  CHECK(c.size == 3);
  CHECK(c.band_index == 4);
  CHECK(c.subject.duration_s == 120.0);
  std::ofstream(dir / "g.cfg") << "delta_r = 0, 0.0083\nf_th_hz = 1.25\nwm_th = -0.5\nsnr_db = 20\n";
  const auto g = load_sweep_grid(dir / "g.cfg");
  CHECK(g.delta_r == std::vector<double>{0.0, 0.0083});
  std::ofstream(dir / "bad.cfg") << "delta = 1\n";
  CHECK_THROWS_AS(load_sweep_grid(dir / "bad.cfg"), ConfigError);
  std::ofstream(dir / "bad2.cfg") << "cohort.size = 0\n";
  CHECK_THROWS_AS(load_cohort_spec(dir / "bad2.cfg"), ConfigError);
}

TEST_CASE("no-drift control") {
  CohortSpec c;
  c.subject.mdf_start_hz = 78.0;
  c.subject.mdf_end_hz = 73.0;
  const auto n = no_drift_control(c);
  CHECK(n.subject.mdf_end_hz == 78.0);
  CHECK(n.subject.seed != c.subject.seed);
  CHECK(ground_truth_mdf(n.subject, 900.0) == 78.0);
}

TEST_CASE("small sweep") {
  CohortSpec c;
  c.size = 3;
  c.subject.duration_s = 300.0;
  c.subject.mdf_start_hz = 78.0;
  c.subject.mdf_end_hz = 73.0;
  SweepGrid g{{0.0, 0.0083}, {1.25}, {-0.5}, {20.0}};
  const FeatureConfig config;
  const auto rows = sweep(g, c, config, WMParams{});
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].delta_r == 0.0083);
  CHECK(rows[1].f_th_hz == 1.25);
  CHECK(rows[1].wm_th == -0.5);
  CHECK(rows[1].snr_db == 20.0);
  CHECK(rows[1].detection_rate >= rows[0].detection_rate);
  for (const auto &r : rows) {
    CHECK(r.false_alarm_rate >= 0.0);
    CHECK(r.false_alarm_rate <= 1.0);
  }
  const auto csv = sweep_csv(rows);
  CHECK(csv.rfind("delta_r,f_th_hz,wm_th,snr_db,detection_rate,false_alarm_rate", 0) == 0);

  // WM values per trajectory do not increase with delta_r.
  for (const auto &m : synth_cohort(c, config)) {
    const auto f = m.trajectory.values();
    CHECK(wm_value(f, 0.0) >= wm_value(f, 0.0083));
  }
  g.snr_db.clear();
  CHECK_THROWS_AS(sweep(g, c, config, WMParams{}), Error);
}
