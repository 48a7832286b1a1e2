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

enum class Wavelet { kDb14, kSym7, kCoif2 };

Wavelet parse_wavelet(const std::string &name);
const char *to_string(Wavelet wavelet);

// Orthonormal decomposition low-pass filter (sum of squares is 1).
std::span<const double> wavelet_lowpass(Wavelet wavelet);
// Quadrature mirror high-pass: g[k] = (-1)^k h[L-1-k].
std::vector<double> wavelet_highpass(Wavelet wavelet);

inline constexpr int kMaxPacketDepth = 8;

// Width of one terminal band: (sample_rate / 2) / 2^depth.
double band_width_hz(double sample_rate_hz, int depth);

// Maps a 0-based frequency-ordered band to its leaf in natural (Paley)
// tree order. Each high-pass split mirrors the spectrum of its parent, which
// makes the natural order the Gray code of the frequency order.
unsigned leaf_for_band(unsigned band);

// Terminal bands of a wavelet packet tree, reconstructed to the time domain
// and ordered by ascending frequency. bands[0] covers [0, band_width_hz).
struct BandSet {
  Wavelet wavelet = Wavelet::kDb14;
  int depth = 0;
  double sample_rate_hz = 0.0;
  double band_width_hz = 0.0;
  std::vector<std::vector<double>> bands;

  std::vector<double> energies() const;
  // Lower edge of the 1-based band index.
  double band_lo_hz(int band_index) const { return (band_index - 1) * band_width_hz; }
  double band_hi_hz(int band_index) const { return band_index * band_width_hz; }
};

// Smallest segment accepted for the given wavelet and depth:
// 2^depth times the filter length.
std::size_t min_packet_length(Wavelet wavelet, int depth);

// Full wavelet-packet tree to `depth` using the periodized orthogonal
// transform. Segments whose length is not a multiple of 2^depth are extended
// by half-sample symmetric reflection before the transform and each band is
// cropped back to the original length. For lengths that are multiples of
// 2^depth the band signals are mutually orthogonal and their energies sum to
// the segment energy.
BandSet wavelet_packet_decompose(std::span<const double> segment, Wavelet wavelet, int depth,
                                 double sample_rate_hz);

// Time-domain reconstruction of a single band (1-based, frequency order).
// Equal to wavelet_packet_decompose(...).bands[band_index - 1] but only walks
// the tree path of that band.
std::vector<double> extract_band(std::span<const double> segment, Wavelet wavelet, int depth,
                                 int band_index);

}  // namespace wmf
