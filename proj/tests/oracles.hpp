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

// Reference computations used as test oracles, written directly from the
// definitions.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wmf::testing {

// Enumerates the positive and negative transition sets explicitly.
inline double brute_force_wm(const std::vector<double> &f, double delta_r) {
  std::vector<std::pair<std::size_t, std::size_t>> d_plus, d_minus;
  for (std::size_t j = 1; j < f.size(); ++j) {
    const double bound = f[j - 1] + delta_r * f[j - 1];
    if (f[j] <= bound) {
      d_minus.emplace_back(j - 1, j);
    } else {
      d_plus.emplace_back(j - 1, j);
    }
  }
  const double n1 = static_cast<double>(f.size() - 1);
  return static_cast<double>(d_plus.size()) / n1 - static_cast<double>(d_minus.size()) / n1;
}

// Upper tail of the F distribution by quadrature of the Beta density after
// t = v^(1/a), which removes the t^(a-1) singularity.
inline double f_sf_quadrature(double f, double d1, double d2) {
  if (f <= 0.0) return 1.0;
  const double a = d1 / 2.0, b = d2 / 2.0;
  const double x = d1 * f / (d1 * f + d2);
  const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  const double v0 = std::pow(x, a);
  const int n = 200000;
  const double h = (1.0 - v0) / n;
  auto g = [&](double v) {
    const double t = std::pow(v, 1.0 / a);
    return t >= 1.0 ? (b == 1.0 ? 1.0 : 0.0) : std::pow(1.0 - t, b - 1.0);
  };
  double s = g(v0) + g(1.0);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * g(v0 + i * h);
  return s * h / 3.0 / a / std::exp(log_beta);
}

struct AnovaOracle {
  double f = 0.0;
  double p = 1.0;
};

inline AnovaOracle anova_oracle(const std::vector<std::vector<double>> &groups) {
  double total = 0.0;
  std::size_t n = 0;
  for (const auto &g : groups) {
    for (double v : g) total += v;
    n += g.size();
  }
  const double grand = total / static_cast<double>(n);
  double ssb = 0.0, ssw = 0.0;
  for (const auto &g : groups) {
    double m = 0.0;
    for (double v : g) m += v;
    m /= static_cast<double>(g.size());
    ssb += static_cast<double>(g.size()) * (m - grand) * (m - grand);
    for (double v : g) ssw += (v - m) * (v - m);
  }
  const double d1 = static_cast<double>(groups.size() - 1);
  const double d2 = static_cast<double>(n - groups.size());
  AnovaOracle r;
  r.f = (ssb / d1) / (ssw / d2);
  r.p = f_sf_quadrature(r.f, d1, d2);
  return r;
}

// Random walk around `start` with occasional steps; values stay positive.
inline std::vector<double> random_walk(std::mt19937_64 &rng, std::size_t n, double start,
                                       double step_sd) {
  std::normal_distribution<double> step(0.0, step_sd);
  std::vector<double> f(n);
  double v = start;
  for (auto &x : f) {
    x = v;
    v = std::max(1.0, v + step(rng));
  }
  return f;
}

inline std::filesystem::path scratch_dir(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("wmfatigue_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace wmf::testing
