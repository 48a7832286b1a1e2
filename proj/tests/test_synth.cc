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
#include <fstream>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wmfatigue/error.hpp"
#include "wmfatigue/features.hpp"
#include "wmfatigue/filter.hpp"
#include "wmfatigue/psd.hpp"
#include "wmfatigue/synth.hpp"

using namespace wmf;

namespace {

SynthSpec short_spec(double seconds) {
  SynthSpec s;
  s.duration_s = seconds;
  return s;
}

double band_power(const Psd &psd, double lo, double hi) {
  double p = 0.0;
  for (std::size_t k = 0; k < psd.density.size(); ++k) {
    if (psd.frequency(k) >= lo && psd.frequency(k) <= hi) p += psd.density[k];
  }
  return p;
}

}  // namespace

TEST_CASE("ground truth schedule") {
  SynthSpec s;
  s.mdf_start_hz = 80.0;
  s.mdf_end_hz = 70.0;
  CHECK(ground_truth_mdf(s, 450.0) == 75.0);
  CHECK(ground_truth_mdf(s, 0.0) == 80.0);
  CHECK(ground_truth_mdf(s, 900.0) == 70.0);
  CHECK_THROWS_AS(ground_truth_mdf(s, -1.0), Error);
  CHECK_THROWS_AS(ground_truth_mdf(s, 901.0), Error);

  s.drift_breakpoints = {{0.0, 80.0}, {300.0, 80.0}, {600.0, 74.0}};
  CHECK(ground_truth_mdf(s, 150.0) == 80.0);
  CHECK(ground_truth_mdf(s, 450.0) == 77.0);
  CHECK(ground_truth_mdf(s, 800.0) == 74.0);
}

TEST_CASE("deterministic for a fixed seed") {
  auto s = short_spec(20.0);
  s.channels = 2;
  const auto a = synth_emg(s);
  const auto b = synth_emg(s);
  REQUIRE(a.channels.size() == 2);
  CHECK(a.channels[0].label == "ch1");
  CHECK(a.channels[0].samples == b.channels[0].samples);
  CHECK(a.channels[1].samples == b.channels[1].samples);
  CHECK(a.channels[0].samples != a.channels[1].samples);
  s.seed = 2;
  CHECK(synth_emg(s).channels[0].samples != a.channels[0].samples);
  CHECK(a.num_samples() == 20 * 2148);
}

TEST_CASE("unit RMS and spectral median at the centre") {
  auto s = short_spec(60.0);
  s.noise_snr_db = 200.0;
  for (double c : {60.0, 80.0, 140.0}) {
    s.mdf_start_hz = s.mdf_end_hz = c;
    const auto x = synth_emg(s).channels[0].samples;
    double ss = 0.0;
    for (double v : x) ss += v * v;
    CHECK(std::sqrt(ss / x.size()) == doctest::Approx(1.0).epsilon(0.03));
    CHECK(median_frequency(x, s.sample_rate_hz) == doctest::Approx(c).epsilon(0.005));
  }
}

TEST_CASE("mains interference is removed by the band-stop") {
  auto s = short_spec(60.0);
  s.mains_amp = 0.5;
  const auto x = synth_emg(s).channels[0].samples;
  const auto bs = design_butterworth(FilterKind::kBandstop, 2, 49.0, 51.0, s.sample_rate_hz);
  const auto y = apply_filter(bs, x);
  const std::vector<double> xs(x.begin() + 10 * 2148, x.end());
  const std::vector<double> ys(y.begin() + 10 * 2148, y.end());
  const auto before = band_power(welch_psd(xs, s.sample_rate_hz), 49.5, 50.5);
  const auto after = band_power(welch_psd(ys, s.sample_rate_hz), 49.5, 50.5);
  CHECK(after <= 0.01 * before);
}

TEST_CASE("lower SNR increases trajectory variance") {
  FeatureConfig config;
  double prev = 0.0;
  for (double snr : {30.0, 15.0, 5.0}) {
    double ss = 0.0;
    std::size_t n = 0;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto s = short_spec(300.0);
      s.seed = seed;
      s.noise_snr_db = snr;
      const auto t = feature_trajectory(synth_emg(s), "ch1", 5, config);
      double mean = 0.0;
      for (const auto &p : t.points) mean += p.f_hz;
      mean /= t.size();
      for (const auto &p : t.points) ss += (p.f_hz - mean) * (p.f_hz - mean);
      n += t.size() - 1;
    }
    const double var = ss / n;
    CHECK(var > prev);
    prev = var;
  }
}

TEST_CASE("spec errors") {
  auto s = short_spec(0.0);
  CHECK_THROWS_AS(synth_emg(s), Error);
  s = short_spec(10.0);
  s.mdf_start_hz = 3.0;
  CHECK_THROWS_WITH_AS(synth_emg(s), doctest::Contains("infeasible band"), Error);
  s = short_spec(10.0);
  s.mdf_end_hz = 1072.0;
  CHECK_THROWS_AS(synth_emg(s), Error);
  s = short_spec(10.0);
  s.drift_breakpoints = {{5.0, 80.0}, {5.0, 70.0}};
  CHECK_THROWS_AS(synth_emg(s), Error);
}

TEST_CASE("spec file parsing and ground truth sidecar") {
  const auto dir = testing::scratch_dir("synth_spec");
  std::ofstream(dir / "s.cfg") << "duration_s = 10\nmdf_start_hz = 80\nmdf_end_hz = 75\n"
                                  "drift_breakpoints = 0:80,5:78,10:75\nseed = 9\n";
  const auto s = load_synth_spec(dir / "s.cfg");
  CHECK(s.seed == 9);
  REQUIRE(s.drift_breakpoints.size() == 3);
  CHECK(ground_truth_mdf(s, 2.5) == 79.0);
  write_ground_truth(s, dir / "truth.csv");
  const auto text = testing::read_file(dir / "truth.csv");
  CHECK(text.rfind("t_s,mdf_hz\n0,80\n1,", 0) == 0);
  CHECK(text.find("\n10,75\n") != std::string::npos);

  std::ofstream(dir / "bad.cfg") << "colour = red\n";
  CHECK_THROWS_AS(load_synth_spec(dir / "bad.cfg"), ConfigError);
  std::ofstream(dir / "bad2.cfg") << "drift_breakpoints = 0-80\n";
  CHECK_THROWS_AS(load_synth_spec(dir / "bad2.cfg"), ConfigError);
}
