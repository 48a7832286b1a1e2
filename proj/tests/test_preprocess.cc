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
#include <numbers>
#include <vector>

#include "doctest.h"
#include "wmfatigue/error.hpp"
#include "wmfatigue/preprocess.hpp"

using namespace wmf;

TEST_CASE("isolated spike is replaced") {
  std::vector<double> x(1001, 0.0);
  x[500] = 5.0;
  const auto y = remove_outliers(x);
  REQUIRE(y.size() == x.size());
  for (double v : y) CHECK(v == 0.0);
}

TEST_CASE("small sequence is unchanged") {
  const std::vector<double> x = {1, 2, 3, 2, 1};
  CHECK(remove_outliers(x) == x);
}

TEST_CASE("interpolation between surviving neighbours") {
  std::vector<double> x(400);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.001 * static_cast<double>(i);
  x[100] = 50.0;
  x[101] = 50.0;
  const auto y = remove_outliers(x);
  CHECK(y[100] == doctest::Approx(0.100));
  CHECK(y[101] == doctest::Approx(0.101));
  CHECK(y[99] == x[99]);
  CHECK(y[102] == x[102]);
}

TEST_CASE("flagged endpoints take the nearest surviving value") {
  std::vector<double> x(300, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i % 2) ? 0.01 : -0.01;
  x[0] = 40.0;
  x[299] = -40.0;
  const auto y = remove_outliers(x);
  CHECK(y[0] == x[1]);
  CHECK(y[299] == x[298]);
}

TEST_CASE("outlier errors") {
  CHECK_THROWS_WITH_AS(remove_outliers(std::vector<double>{0.0, 1.0}, 0.5), "degenerate signal", Error);
  CHECK_THROWS_AS(remove_outliers(std::vector<double>{1.0}), Error);
  CHECK_THROWS_AS(remove_outliers(std::vector<double>{1.0, 2.0, 3.0}, 0.0), Error);
}

TEST_CASE("segmentation") {
  std::vector<double> x(9500, 1.0);
  const auto set = segment(x, 100.0, 30.0);
  REQUIRE(set.size() == 3);
  CHECK(set.end_time(0) == 30.0);
  CHECK(set.end_time(2) == 90.0);
  for (const auto &s : set.segments) CHECK(s.samples.size() == 3000);

  CHECK(segment(std::vector<double>(3000, 0.0), 100.0, 30.0).size() == 1);
  CHECK_THROWS_AS(segment(std::vector<double>(2999, 0.0), 100.0, 30.0), Error);
  CHECK(segment_samples(2148.0, 30.0) == 64440);
  CHECK_THROWS_AS(segment_samples(2148.0, 0.0), Error);
}

TEST_CASE("preprocess removes DC and mains") {
  const double fs = 2148.0;
  std::vector<double> x(static_cast<std::size_t>(20 * fs));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = static_cast<double>(i) / fs;
    x[i] = 3.0 + std::sin(2 * std::numbers::pi * 50.0 * t) + std::sin(2 * std::numbers::pi * 120.0 * t);
  }
  const auto y = preprocess_channel(x, fs, PreprocessConfig{});
  REQUIRE(y.size() == x.size());
  // After transients only the 120 Hz component remains (unit amplitude).
  double peak = 0.0;
  for (std::size_t i = x.size() - 2148; i < x.size(); ++i) peak = std::max(peak, std::abs(y[i]));
  CHECK(peak == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("remove_mean") {
  std::vector<double> x = {1.0, 2.0, 3.0, 6.0};
  remove_mean(x);
  CHECK(x[0] == -2.0);
  CHECK(x[3] == 3.0);
}
