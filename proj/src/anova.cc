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

#include "wmfatigue/anova.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>

#include "wmfatigue/error.hpp"

namespace wmf {

double f_distribution_sf(double f, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0)) throw Error("F distribution: degrees of freedom must be positive");
  if (std::isnan(f)) throw Error("F distribution: NaN statistic");
  if (f <= 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  // P(X > f) = I_{d2 / (d2 + d1 f)}(d2 / 2, d1 / 2).
  const double x = d2 / (d2 + d1 * f);
  return boost::math::ibeta(d2 / 2.0, d1 / 2.0, x);
}

AnovaResult one_way_anova(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw Error("ANOVA: need at least two groups");
  std::size_t total_n = 0;
  double grand_sum = 0.0;
  for (const auto &g : groups) {
    if (g.size() < 2) throw Error("ANOVA: insufficient observations (each group needs at least 2)");
    total_n += g.size();
    for (double v : g) {
      if (!std::isfinite(v)) throw Error("ANOVA: non-finite observation");
      grand_sum += v;
    }
  }
  const double grand_mean = grand_sum / static_cast<double>(total_n);

  AnovaResult r;
  for (const auto &g : groups) {
    double sum = 0.0;
    for (double v : g) sum += v;
    const double mean = sum / static_cast<double>(g.size());
    r.ss_between += static_cast<double>(g.size()) * (mean - grand_mean) * (mean - grand_mean);
    for (double v : g) r.ss_within += (v - mean) * (v - mean);
  }
  r.df_between = static_cast<int>(groups.size()) - 1;
  r.df_within = static_cast<int>(total_n - groups.size());

  const double ms_between = r.ss_between / r.df_between;
  const double ms_within = r.ss_within / r.df_within;
  if (ms_between == 0.0) {
    r.f_stat = 0.0;
    r.p_value = 1.0;
  } else if (ms_within == 0.0) {
    r.f_stat = std::numeric_limits<double>::infinity();
    r.p_value = 0.0;
  } else {
    r.f_stat = ms_between / ms_within;
    r.p_value = f_distribution_sf(r.f_stat, r.df_between, r.df_within);
  }
  return r;
}

std::vector<BandSelection> anova_band_select(std::span<const BandGroups> candidates, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("ANOVA: alpha must be in (0, 1]");
  std::vector<BandSelection> selected;
  for (const auto &c : candidates) {
    const AnovaResult r = one_way_anova(c.groups);
    if (r.p_value < alpha) selected.push_back({c.channel, c.band_index, r.p_value, r.f_stat});
  }
  std::sort(selected.begin(), selected.end(), [](const BandSelection &a, const BandSelection &b) {
    if (a.p_value != b.p_value) return a.p_value < b.p_value;
    if (a.channel != b.channel) return a.channel < b.channel;
    return a.band_index < b.band_index;
  });
  return selected;
}

}  // namespace wmf
