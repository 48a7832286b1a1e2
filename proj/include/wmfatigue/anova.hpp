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
#include <string>
#include <vector>

namespace wmf {

struct AnovaResult {
  double f_stat = 0.0;
  double p_value = 1.0;
  double ss_between = 0.0;
  double ss_within = 0.0;
  int df_between = 0;
  int df_within = 0;
};

// One-way ANOVA F-test. Needs at least two groups of at least two
// observations each. Identical group means give F = 0, p = 1; zero
// within-group variance with distinct means gives F = +inf, p = 0.
AnovaResult one_way_anova(std::span<const std::vector<double>> groups);

// Upper tail P(X > f) of the F(d1, d2) distribution.
double f_distribution_sf(double f, double d1, double d2);

// Median-frequency observations of one (channel, band) at each probe time.
struct BandGroups {
  std::string channel;
  int band_index = 0;
  std::vector<std::vector<double>> groups;
};

struct BandSelection {
  std::string channel;
  int band_index = 0;
  double p_value = 1.0;
  double f_stat = 0.0;
};

// Runs the F-test per (channel, band) and keeps those with p < alpha,
// sorted by ascending p (ties by channel, then band).
std::vector<BandSelection> anova_band_select(std::span<const BandGroups> candidates,
                                             double alpha = 0.05);

}  // namespace wmf
