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

#include "wmfatigue/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wmfatigue/error.hpp"

namespace wmf {

using cplx = std::complex<double>;

std::complex<double> SecondOrderSection::response(cplx z_inv) const {
  const cplx z2 = z_inv * z_inv;
  return (b0 + b1 * z_inv + b2 * z2) / (1.0 + a1 * z_inv + a2 * z2);
}

double SecondOrderSection::pole_radius() const {
  // Roots of z^2 + a1 z + a2.
  const cplx disc = std::sqrt(cplx(a1 * a1 - 4.0 * a2, 0.0));
  const cplx r1 = (-a1 + disc) / 2.0;
  const cplx r2 = (-a1 - disc) / 2.0;
  return std::max(std::abs(r1), std::abs(r2));
}

FilterCascade::FilterCascade(std::vector<SecondOrderSection> sections, FilterDesign meta)
    : sections_(std::move(sections)), meta_(meta) {
  if (sections_.empty()) throw Error("filter cascade has no sections");
  if (!is_stable()) throw Error("unstable filter cascade: pole on or outside the unit circle");
}

bool FilterCascade::is_stable() const {
  return std::all_of(sections_.begin(), sections_.end(), [](const SecondOrderSection &s) {
    const double r = s.pole_radius();
    return std::isfinite(r) && r < 1.0;
  });
}

std::complex<double> FilterCascade::response(double f_hz) const {
  const double w = 2.0 * std::numbers::pi * f_hz / meta_.sample_rate_hz;
  const cplx z_inv = std::polar(1.0, -w);
  cplx h(1.0, 0.0);
  for (const auto &s : sections_) h *= s.response(z_inv);
  return h;
}

double FilterCascade::magnitude_db(double f_hz) const {
  return 20.0 * std::log10(std::abs(response(f_hz)));
}

namespace {

// Biquad with the given digital pole pair and numerator 1 + nb1 z^-1 + nb2 z^-2.
SecondOrderSection make_section(cplx z1, cplx z2, double nb1, double nb2) {
  SecondOrderSection s;
  s.a1 = -(z1 + z2).real();
  s.a2 = (z1 * z2).real();
  s.b0 = 1.0;
  s.b1 = nb1;
  s.b2 = nb2;
  return s;
}

}  // namespace

FilterCascade design_butterworth(FilterKind kind, int order, double f_lo_hz, double f_hi_hz,
                                 double sample_rate_hz) {
  if (!(sample_rate_hz > 0.0)) throw Error("filter design: sample rate must be positive");
  const double nyquist = sample_rate_hz / 2.0;
  if (!(f_lo_hz > 0.0 && f_lo_hz < f_hi_hz && f_hi_hz < nyquist)) {
    throw Error("filter design: cutoffs must satisfy 0 < lo < hi < Nyquist (" +
                std::to_string(nyquist) + " Hz)");
  }
  if (order % 2 != 0) throw Error("filter design: odd order " + std::to_string(order) + " unsupported");
  if (order < 2 || order > 8) {
    throw Error("filter design: order must be one of 2, 4, 6, 8");
  }

  const int n = order / 2;
  const double fs2 = 2.0 * sample_rate_hz;
  const double w_lo = fs2 * std::tan(std::numbers::pi * f_lo_hz / sample_rate_hz);
  const double w_hi = fs2 * std::tan(std::numbers::pi * f_hi_hz / sample_rate_hz);
  const double w0_sq = w_lo * w_hi;
  const double bw = w_hi - w_lo;
  const double digital_center = 2.0 * std::atan(std::sqrt(w0_sq) / fs2);

  auto bilinear = [fs2](cplx s) { return (fs2 + s) / (fs2 - s); };

  // The two analog poles produced by one prototype pole.
  auto transform = [&](cplx p) -> std::pair<cplx, cplx> {
    const cplx c = kind == FilterKind::kBandpass ? p * bw : bw / p;
    const cplx disc = std::sqrt(c * c - 4.0 * w0_sq);
    return {(c + disc) / 2.0, (c - disc) / 2.0};
  };

  // Bandpass zeros at z = +1 and z = -1 per section; bandstop zeros on the
  // unit circle at the notch center.
  const double nb1 = kind == FilterKind::kBandpass ? 0.0 : -2.0 * std::cos(digital_center);
  const double nb2 = kind == FilterKind::kBandpass ? -1.0 : 1.0;
  const double ref_w = kind == FilterKind::kBandpass ? digital_center : 0.0;

  std::vector<SecondOrderSection> sections;
  auto push = [&](cplx z1, cplx z2) {
    // Unit gain at the reference frequency for every section.
    SecondOrderSection s = make_section(z1, z2, nb1, nb2);
    const double g = std::abs(s.response(std::polar(1.0, -ref_w)));
    s.b0 /= g;
    s.b1 /= g;
    s.b2 /= g;
    sections.push_back(s);
  };

  for (int k = 1; 2 * k < n + 1; ++k) {
    const cplx p = std::polar(1.0, std::numbers::pi * (2.0 * k + n - 1) / (2.0 * n));
    const auto [s1, s2] = transform(p);
    const cplx z1 = bilinear(s1);
    const cplx z2 = bilinear(s2);
    push(z1, std::conj(z1));
    push(z2, std::conj(z2));
  }
  if (n % 2 == 1) {
    const auto [s1, s2] = transform(cplx(-1.0, 0.0));
    push(bilinear(s1), bilinear(s2));
  }

  return FilterCascade(std::move(sections),
                       FilterDesign{kind, order, f_lo_hz, f_hi_hz, sample_rate_hz});
}

namespace {

void run_section(const SecondOrderSection &s, std::vector<double> &x) {
  double z1 = 0.0, z2 = 0.0;
  for (double &v : x) {
    const double in = v;
    const double out = s.b0 * in + z1;
    z1 = s.b1 * in - s.a1 * out + z2;
    z2 = s.b2 * in - s.a2 * out;
    v = out;
  }
}

void check_finite(std::span<const double> samples) {
  for (double v : samples) {
    if (!std::isfinite(v)) throw Error("apply_filter: non-finite input sample");
  }
}

}  // namespace

std::vector<double> apply_filter(const FilterCascade &cascade, std::span<const double> samples) {
  check_finite(samples);
  std::vector<double> y(samples.begin(), samples.end());
  for (const auto &s : cascade.sections()) run_section(s, y);
  return y;
}

std::vector<double> apply_filter_zero_phase(const FilterCascade &cascade,
                                            std::span<const double> samples) {
  std::vector<double> y = apply_filter(cascade, samples);
  std::reverse(y.begin(), y.end());
  for (const auto &s : cascade.sections()) run_section(s, y);
  std::reverse(y.begin(), y.end());
  return y;
}

}  // namespace wmf
