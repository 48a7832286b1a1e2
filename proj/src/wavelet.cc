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

#include "wmfatigue/wavelet.hpp"

#include <array>
#include <string>

#include "wmfatigue/error.hpp"

namespace wmf {

namespace {

// Daubechies 14 (28 taps).
constexpr std::array<double, 28> kDb14 = {
    -1.7871399683113592e-07, 1.7249946753678127e-06, -4.389704901781394e-06,
    -1.0337209184570774e-05, 6.87550425269751e-05, -4.1777245770372596e-05,
    -0.0003868319473129545, 0.0007080211542355279, 0.001061691085606762,
    -0.0038496388680221874, -0.000746218989268385, 0.01278949326633341,
    -0.005615049530356959, -0.030185351540390634, 0.026981408307912916,
    0.05523712625921604, -0.07154895550404614, -0.08674841156816969,
    0.1399890165844607, 0.1383952138648066, -0.21803352999327605,
    -0.27168855227874805, 0.21867068775890652, 0.6311878491048568,
    0.5543056179408938, 0.2548502677926214, 0.0623647588493989,
    0.006461153460087948,
};

// Symlet 7 (14 taps).
constexpr std::array<double, 14> kSym7 = {
    0.002681814568257878, -0.0010473848886829163, -0.01263630340325193,
    0.03051551316596357, 0.0678926935013727, -0.049552834937127255,
    0.017441255086855827, 0.5361019170917628, 0.767764317003164,
    0.2886296317515146, -0.14004724044296152, -0.10780823770381774,
    0.004010244871533663, 0.010268176708511255,
};

// Coiflet 2 (12 taps).
constexpr std::array<double, 12> kCoif2 = {
    -0.000720549445520347, -0.0018232088709110323, 0.005611434819368834,
    0.02368017194684777, -0.05943441864643109, -0.07648859907828076,
    0.4170051844232391, 0.8127236354494135, 0.3861100668227629,
    -0.0673725547237256, -0.04146493678687178, 0.01638733646320364,
};

struct FilterPair {
  std::vector<double> lo;
  std::vector<double> hi;
};

FilterPair filters(Wavelet wavelet) {
  const auto lo = wavelet_lowpass(wavelet);
  return {std::vector<double>(lo.begin(), lo.end()), wavelet_highpass(wavelet)};
}

// One periodized analysis step: c[n] = sum_k f[k] x[(2n + k) mod N].
std::vector<double> analyze(const std::vector<double> &x, const std::vector<double> &f) {
  const std::size_t n = x.size();
  const std::size_t half = n / 2;
  const std::size_t taps = f.size();
  std::vector<double> out(half, 0.0);
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t start = 2 * i;
    double acc = 0.0;
    if (start + taps <= n) {
      const double *xp = x.data() + start;
      for (std::size_t k = 0; k < taps; ++k) acc += f[k] * xp[k];
    } else {
      for (std::size_t k = 0; k < taps; ++k) acc += f[k] * x[(start + k) % n];
    }
    out[i] = acc;
  }
  return out;
}

// Adjoint (= inverse, the transform is orthogonal) of analyze, accumulated
// into `out` of length 2 * c.size().
void synthesize_into(const std::vector<double> &c, const std::vector<double> &f,
                     std::vector<double> &out) {
  const std::size_t n = out.size();
  const std::size_t taps = f.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double v = c[i];
    const std::size_t start = 2 * i;
    if (start + taps <= n) {
      double *op = out.data() + start;
      for (std::size_t k = 0; k < taps; ++k) op[k] += f[k] * v;
    } else {
      for (std::size_t k = 0; k < taps; ++k) out[(start + k) % n] += f[k] * v;
    }
  }
}

void check_args(std::size_t length, Wavelet wavelet, int depth) {
  if (depth < 1 || depth > kMaxPacketDepth) {
    throw Error("wavelet packet depth must be in [1, " + std::to_string(kMaxPacketDepth) + "]");
  }
  if (length < min_packet_length(wavelet, depth)) {
    throw Error("segment too short for wavelet packet decomposition (" + std::to_string(length) +
                " < " + std::to_string(min_packet_length(wavelet, depth)) + " samples)");
  }
}

std::vector<double> extend_to_multiple(std::span<const double> segment, int depth) {
  const std::size_t block = std::size_t{1} << depth;
  const std::size_t n = segment.size();
  const std::size_t padded = (n + block - 1) / block * block;
  std::vector<double> x(segment.begin(), segment.end());
  x.reserve(padded);
  for (std::size_t i = 0; x.size() < padded; ++i) x.push_back(segment[n - 1 - i]);
  return x;
}

// Reconstructs the time signal of a single leaf given by
// its natural-order index.
std::vector<double> reconstruct_leaf(std::vector<double> coeffs, unsigned leaf, int depth,
                                     const FilterPair &fp) {
  for (int level = depth; level >= 1; --level) {
    const bool high = ((leaf >> (depth - level)) & 1u) != 0;
    std::vector<double> parent(coeffs.size() * 2, 0.0);
    synthesize_into(coeffs, high ? fp.hi : fp.lo, parent);
    coeffs = std::move(parent);
  }
  return coeffs;
}

}  // namespace

Wavelet parse_wavelet(const std::string &name) {
  if (name == "db14") return Wavelet::kDb14;
  if (name == "sym7") return Wavelet::kSym7;
  if (name == "coif2") return Wavelet::kCoif2;
  throw Error("unknown wavelet '" + name + "' (expected db14, sym7 or coif2)");
}

const char *to_string(Wavelet wavelet) {
  switch (wavelet) {
    case Wavelet::kDb14:
      return "db14";
    case Wavelet::kSym7:
      return "sym7";
    case Wavelet::kCoif2:
      return "coif2";
  }
  return "?";
}

std::span<const double> wavelet_lowpass(Wavelet wavelet) {
  switch (wavelet) {
    case Wavelet::kDb14:
      return kDb14;
    case Wavelet::kSym7:
      return kSym7;
    case Wavelet::kCoif2:
      return kCoif2;
  }
  throw Error("unknown wavelet");
}

std::vector<double> wavelet_highpass(Wavelet wavelet) {
  const auto lo = wavelet_lowpass(wavelet);
  const std::size_t len = lo.size();
  std::vector<double> hi(len);
  for (std::size_t k = 0; k < len; ++k) {
    hi[k] = (k % 2 == 0 ? 1.0 : -1.0) * lo[len - 1 - k];
  }
  return hi;
}

double band_width_hz(double sample_rate_hz, int depth) {
  return sample_rate_hz / 2.0 / static_cast<double>(1u << depth);
}

unsigned leaf_for_band(unsigned band) { return band ^ (band >> 1); }

std::size_t min_packet_length(Wavelet wavelet, int depth) {
  return (std::size_t{1} << depth) * wavelet_lowpass(wavelet).size();
}

std::vector<double> BandSet::energies() const {
  std::vector<double> e;
  e.reserve(bands.size());
  for (const auto &b : bands) {
    double acc = 0.0;
    for (double v : b) acc += v * v;
    e.push_back(acc);
  }
  return e;
}

BandSet wavelet_packet_decompose(std::span<const double> segment, Wavelet wavelet, int depth,
                                 double sample_rate_hz) {
  check_args(segment.size(), wavelet, depth);
  const FilterPair fp = filters(wavelet);

  // Natural order: node i at level l has children 2i (low) and 2i+1 (high).
  std::vector<std::vector<double>> level{extend_to_multiple(segment, depth)};
  for (int l = 0; l < depth; ++l) {
    std::vector<std::vector<double>> next;
    next.reserve(level.size() * 2);
    for (const auto &node : level) {
      next.push_back(analyze(node, fp.lo));
      next.push_back(analyze(node, fp.hi));
    }
    level = std::move(next);
  }

  BandSet set;
  set.wavelet = wavelet;
  set.depth = depth;
  set.sample_rate_hz = sample_rate_hz;
  set.band_width_hz = band_width_hz(sample_rate_hz, depth);
  const unsigned count = 1u << depth;
  set.bands.reserve(count);
  for (unsigned band = 0; band < count; ++band) {
    const unsigned leaf = leaf_for_band(band);
    auto full = reconstruct_leaf(level[leaf], leaf, depth, fp);
    full.resize(segment.size());
    set.bands.push_back(std::move(full));
  }
  return set;
}

std::vector<double> extract_band(std::span<const double> segment, Wavelet wavelet, int depth,
                                 int band_index) {
  check_args(segment.size(), wavelet, depth);
  const int count = 1 << depth;
  if (band_index < 1 || band_index > count) {
    throw Error("band index must be in [1, " + std::to_string(count) + "]");
  }
  const FilterPair fp = filters(wavelet);
  const unsigned leaf = leaf_for_band(static_cast<unsigned>(band_index - 1));

  std::vector<double> node = extend_to_multiple(segment, depth);
  for (int level = 1; level <= depth; ++level) {
    const bool high = ((leaf >> (depth - level)) & 1u) != 0;
    node = analyze(node, high ? fp.hi : fp.lo);
  }
  auto out = reconstruct_leaf(std::move(node), leaf, depth, fp);
  out.resize(segment.size());
  return out;
}

}  // namespace wmf
