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
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wmfatigue/anova.hpp"
#include "wmfatigue/error.hpp"

using namespace wmf;
using Groups = std::vector<std::vector<double>>;

TEST_CASE("anova three-group fixture") {
  const Groups g = {{5.1, 4.9}, {4.0, 4.2}, {3.0, 2.8}};
  const auto oracle = testing::anova_oracle(g);
  const auto r = one_way_anova(g);
  CHECK(r.df_between == 2);
  CHECK(r.df_within == 3);
  CHECK(r.ss_between == doctest::Approx(4.44).epsilon(1e-12));
  CHECK(r.ss_within == doctest::Approx(0.06).epsilon(1e-10));
  CHECK(std::abs(r.f_stat - oracle.f) <= 1e-6 * oracle.f);
  CHECK(std::abs(r.p_value - oracle.p) <= 1e-6);
  // F(2, 3) tail has the closed form (1 + 2F/3)^(-3/2).
  CHECK(r.f_stat == doctest::Approx(111.0).epsilon(1e-9));
  CHECK(r.p_value == doctest::Approx(std::pow(75.0, -1.5)).epsilon(1e-9));

  BandGroups bg{"ch1", 5, g};
  const auto sel = anova_band_select(std::span<const BandGroups>(&bg, 1));
  REQUIRE(sel.size() == 1);
  CHECK(sel[0].band_index == 5);
}

TEST_CASE("anova identical groups") {
  const Groups g = {{10, 11}, {10, 11}, {10, 11}};
  const auto r = one_way_anova(g);
  CHECK(r.f_stat == 0.0);
  CHECK(r.p_value == 1.0);
  BandGroups bg{"ch1", 2, g};
  CHECK(anova_band_select(std::span<const BandGroups>(&bg, 1)).empty());
}

TEST_CASE("anova zero within-group variance") {
  const auto r = one_way_anova(Groups{{1, 1}, {2, 2}});
  CHECK(std::isinf(r.f_stat));
  CHECK(r.p_value == 0.0);
}

TEST_CASE("anova insufficient observations") {
  CHECK_THROWS_AS(one_way_anova(Groups{{1.0}, {2.0, 3.0}}), Error);
  CHECK_THROWS_AS(one_way_anova(Groups{{1.0, 2.0}}), Error);
  CHECK_THROWS_AS(one_way_anova(Groups{}), Error);
}

TEST_CASE("F tail closed forms") {
  // d1 = 2: P(X > f) = (1 + 2f/d2)^(-d2/2).
  for (double d2 : {2.0, 3.0, 7.0, 30.0}) {
    for (double f : {0.1, 1.0, 4.0, 25.0}) {
      CHECK(f_distribution_sf(f, 2.0, d2) == doctest::Approx(std::pow(1.0 + 2.0 * f / d2, -d2 / 2.0)).epsilon(1e-12));
    }
  }
  // F(1, 1) is the square of a standard Cauchy variable.
  CHECK(f_distribution_sf(1.0, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f_distribution_sf(0.0, 3.0, 4.0) == 1.0);
}

TEST_CASE("anova matches oracle on random groups") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> groups_n(2, 5), size_n(2, 12);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    Groups g(groups_n(rng));
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double shift = 0.4 * static_cast<double>(k) * (trial % 3);
      g[k].resize(size_n(rng));
      for (double &v : g[k]) v = 50.0 + shift + noise(rng);
    }
    const auto o = testing::anova_oracle(g);
    const auto r = one_way_anova(g);
    CHECK(std::abs(r.f_stat - o.f) <= 1e-9 * std::max(1.0, o.f));
    CHECK(std::abs(r.p_value - o.p) <= 1e-6);
  }
}

TEST_CASE("band selection ordering") {
  std::vector<BandGroups> c = {
      {"ch2", 4, {{1.0, 1.1}, {2.0, 2.1}, {3.0, 3.2}}},
      {"ch1", 5, {{5.1, 4.9}, {4.0, 4.2}, {3.0, 2.8}}},
      {"ch1", 6, {{1.0, 2.0}, {1.5, 1.4}, {1.2, 1.9}}},
  };
  const auto sel = anova_band_select(c, 0.05);
  REQUIRE(sel.size() == 2);
  CHECK(sel[0].p_value <= sel[1].p_value);
  for (const auto &s : sel) CHECK(s.band_index != 6);
  CHECK_THROWS_AS(anova_band_select(c, 0.0), Error);
}
