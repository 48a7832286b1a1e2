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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "wmfatigue/error.hpp"
#include "wmfatigue/wavelet.hpp"

using namespace wmf;

namespace {

constexpr double kFs = 2148.0;
constexpr Wavelet kAll[] = {Wavelet::kDb14, Wavelet::kSym7, Wavelet::kCoif2};

std::vector<double> noise(std::mt19937_64 &rng, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> x(n);
  for (double &v : x) v = d(rng);
  return x;
}

std::vector<double> tone(double f, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::sin(2 * std::numbers::pi * f * i / kFs + 0.3);
  return x;
}

double energy(const std::vector<double> &x) {
  return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

}  // namespace

TEST_CASE("filter coefficients are orthonormal") {
  for (auto w : kAll) {
    const auto h = wavelet_lowpass(w);
    const auto g = wavelet_highpass(w);
    REQUIRE(h.size() == g.size());
    double sum = 0.0;
    for (double v : h) sum += v;
    CHECK(sum == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    for (std::size_t shift = 0; shift < h.size(); shift += 2) {
      double hh = 0.0, hg = 0.0;
      for (std::size_t k = 0; k + shift < h.size(); ++k) {
        hh += h[k] * h[k + shift];
        hg += h[k] * g[k + shift];
      }
      CHECK(std::abs(hh - (shift == 0 ? 1.0 : 0.0)) < 1e-12);
      CHECK(std::abs(hg) < 1e-12);
    }
  }
  CHECK(wavelet_lowpass(Wavelet::kDb14).size() == 28);
  CHECK(wavelet_lowpass(Wavelet::kSym7).size() == 14);
  CHECK(wavelet_lowpass(Wavelet::kCoif2).size() == 12);
}

TEST_CASE("band geometry") {
  CHECK(band_width_hz(kFs, 6) == 16.78125);
  const std::vector<unsigned> gray = {0, 1, 3, 2, 6, 7, 5, 4};
  for (unsigned b = 0; b < gray.size(); ++b) CHECK(leaf_for_band(b) == gray[b]);
  CHECK(parse_wavelet("sym7") == Wavelet::kSym7);
  CHECK(std::string(to_string(Wavelet::kCoif2)) == "coif2");
  CHECK_THROWS_AS(parse_wavelet("haar"), Error);
}

TEST_CASE("energy conservation and perfect reconstruction") {
  std::mt19937_64 rng(41);
  for (auto w : kAll) {
    for (std::size_t n : {std::size_t{4096}, std::size_t{64 * 1007}}) {
      const auto x = noise(rng, n);
      const auto set = wavelet_packet_decompose(x, w, 6, kFs);
      REQUIRE(set.bands.size() == 64);
      const auto e = set.energies();
      const double total = std::accumulate(e.begin(), e.end(), 0.0);
      CHECK(std::abs(total - energy(x)) <= 1e-9 * energy(x));
      std::vector<double> sum(n, 0.0);
      for (const auto &b : set.bands) {
        for (std::size_t i = 0; i < n; ++i) sum[i] += b[i];
      }
      for (std::size_t i = 0; i < n; i += 97) CHECK(std::abs(sum[i] - x[i]) < 1e-9);
    }
  }
}

TEST_CASE("lengths off the dyadic grid are padded and cropped") {
  std::mt19937_64 rng(42);
  const auto x = noise(rng, 64440);
  const auto set = wavelet_packet_decompose(x, Wavelet::kDb14, 6, kFs);
  for (const auto &b : set.bands) CHECK(b.size() == x.size());
  const auto e = set.energies();
  const double total = std::accumulate(e.begin(), e.end(), 0.0);
  CHECK(total == doctest::Approx(energy(x)).epsilon(0.01));
}

TEST_CASE("75 Hz tone lands in band 5") {
  for (std::size_t n : {std::size_t{64440}, std::size_t{4096}}) {
    const auto set = wavelet_packet_decompose(tone(75.0, n), Wavelet::kDb14, 6, kFs);
    const auto e = set.energies();
    const double total = std::accumulate(e.begin(), e.end(), 0.0);
    CHECK(set.band_lo_hz(5) == 67.125);
    CHECK(set.band_hi_hz(5) == 83.90625);
    CHECK(e[4] / total >= 0.8);
  }
}

TEST_CASE("band ordering follows frequency") {
  for (auto w : kAll) {
    for (int band = 1; band <= 64; ++band) {
      const double center = (band - 0.5) * band_width_hz(kFs, 6);
      const auto set = wavelet_packet_decompose(tone(center, 8192), w, 6, kFs);
      const auto e = set.energies();
      const auto peak = std::max_element(e.begin(), e.end()) - e.begin();
      CHECK(peak == band - 1);
    }
  }
}

TEST_CASE("extract_band equals the full decomposition") {
  std::mt19937_64 rng(43);
  const auto x = noise(rng, 6000);
  for (auto w : kAll) {
    for (int depth : {1, 3, 6}) {
      const auto set = wavelet_packet_decompose(x, w, depth, kFs);
      for (int band = 1; band <= (1 << depth); band += 3) {
        const auto b = extract_band(x, w, depth, band);
        REQUIRE(b.size() == x.size());
        for (std::size_t i = 0; i < x.size(); i += 11) CHECK(b[i] == doctest::Approx(set.bands[band - 1][i]).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("decomposition errors") {
  std::vector<double> x(10000, 0.0);
  CHECK_THROWS_AS(wavelet_packet_decompose(x, Wavelet::kDb14, 0, kFs), Error);
  CHECK_THROWS_AS(wavelet_packet_decompose(x, Wavelet::kDb14, kMaxPacketDepth + 1, kFs), Error);
  CHECK_THROWS_AS(wavelet_packet_decompose(std::vector<double>(100, 0.0), Wavelet::kDb14, 6, kFs), Error);
  CHECK_THROWS_AS(extract_band(x, Wavelet::kDb14, 6, 0), Error);
  CHECK_THROWS_AS(extract_band(x, Wavelet::kDb14, 6, 65), Error);
  CHECK(min_packet_length(Wavelet::kDb14, 6) == 64 * 28);
}
