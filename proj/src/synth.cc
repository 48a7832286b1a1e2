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

#include "wmfatigue/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "fft.hpp"
#include "wmfatigue/error.hpp"
#include "wmfatigue/io.hpp"

namespace wmf {

namespace {

constexpr double kMainsHz = 50.0;
constexpr double kBlockS = 1.0;

std::vector<DriftPoint> schedule(const SynthSpec &spec) {
  if (!spec.drift_breakpoints.empty()) return spec.drift_breakpoints;
  return {{0.0, spec.mdf_start_hz}, {spec.duration_s, spec.mdf_end_hz}};
}

double interpolate(const std::vector<DriftPoint> &pts, double t) {
  if (t <= pts.front().t_s) return pts.front().mdf_hz;
  if (t >= pts.back().t_s) return pts.back().mdf_hz;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (t <= pts[i].t_s) {
      const auto &a = pts[i - 1];
      const auto &b = pts[i];
      if (t == b.t_s) return b.mdf_hz;
      return a.mdf_hz + (t - a.t_s) / (b.t_s - a.t_s) * (b.mdf_hz - a.mdf_hz);
    }
  }
  return pts.back().mdf_hz;
}

std::vector<DriftPoint> parse_breakpoints(const std::string &value) {
  std::vector<DriftPoint> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("drift_breakpoints: expected 't:mdf' pairs, got '" + item + "'");
    }
    out.push_back({parse_double_value("drift_breakpoints", item.substr(0, colon)),
                   parse_double_value("drift_breakpoints", item.substr(colon + 1))});
  }
  return out;
}

std::vector<double> synth_channel(const SynthSpec &spec, int channel_index) {
  const double fs = spec.sample_rate_hz;
  const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * fs));
  std::size_t block = static_cast<std::size_t>(std::llround(kBlockS * fs));
  block += block % 2;
  const std::size_t hop = block / 2;
  const auto pts = schedule(spec);

  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed & 0xffffffffu),
                    static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(channel_index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<double> window(block);
  for (std::size_t i = 0; i < block; ++i) {
    window[i] = std::sin(std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(block));
  }

  detail::RealFft fft(block);
  const double bin_hz = fs / static_cast<double>(block);
  const double halfwidth = spec.passband_halfwidth_hz;
  std::vector<double> out(n, 0.0);
  std::vector<double> shape(fft.bins());

  // Frame k covers [k * hop - hop, k * hop + hop), so every output sample
  // sits under exactly two frames.
  for (std::size_t k = 0; k * hop < n + hop; ++k) {
    const double start = static_cast<double>(k * hop) - static_cast<double>(hop);
    const double center_t = std::clamp((start + static_cast<double>(block) / 2.0) / fs, 0.0,
                                       spec.duration_s);
    const double center_hz = interpolate(pts, center_t);

    double two_sided_power = 0.0;
    for (std::size_t b = 0; b < shape.size(); ++b) {
      const double d = static_cast<double>(b) * bin_hz - center_hz;
      shape[b] = std::abs(d) < halfwidth ? std::cos(std::numbers::pi * d / (2.0 * halfwidth)) : 0.0;
      const bool paired = b != 0 && !(b == shape.size() - 1 && block % 2 == 0);
      two_sided_power += (paired ? 2.0 : 1.0) * shape[b] * shape[b];
    }
    if (!(two_sided_power > 0.0)) throw Error("synth: shaping band contains no frequency bins");
    // Unit output variance for unit-variance white input.
    const double gain = std::sqrt(static_cast<double>(block) / two_sided_power) /
                        static_cast<double>(block);

    auto buf = fft.time();
    for (double &v : buf) v = normal(rng);
    fft.forward();
    auto spec_bins = fft.freq();
    for (std::size_t b = 0; b < spec_bins.size(); ++b) spec_bins[b] *= shape[b] * gain;
    fft.inverse();

    const auto base = static_cast<long long>(k * hop) - static_cast<long long>(hop);
    for (std::size_t i = 0; i < block; ++i) {
      const long long idx = base + static_cast<long long>(i);
      if (idx < 0 || idx >= static_cast<long long>(n)) continue;
      out[static_cast<std::size_t>(idx)] += buf[i] * window[i];
    }
  }

  if (spec.mains_amp > 0.0) {
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
    const double phase = phase_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] += spec.mains_amp *
                std::sin(2.0 * std::numbers::pi * kMainsHz * static_cast<double>(i) / fs + phase);
    }
  }
  const double noise_sd = std::pow(10.0, -spec.noise_snr_db / 20.0);
  for (double &v : out) v += noise_sd * normal(rng);
  return out;
}

}  // namespace

void SynthSpec::validate() const {
  if (!(duration_s > 0.0)) throw Error("synth: duration must be positive");
  if (!(sample_rate_hz > 0.0)) throw Error("synth: sample rate must be positive");
  if (!(passband_halfwidth_hz > 0.0)) throw Error("synth: passband half-width must be positive");
  if (!(mains_amp >= 0.0)) throw Error("synth: mains amplitude must be non-negative");
  if (!std::isfinite(noise_snr_db)) throw Error("synth: SNR must be finite");
  if (channels < 1) throw Error("synth: need at least one channel");
  if (std::llround(duration_s * sample_rate_hz) < 2) throw Error("synth: duration too short");
  const double nyquist = sample_rate_hz / 2.0;
  if (mains_amp > 0.0 && kMainsHz >= nyquist) throw Error("synth: mains frequency above Nyquist");
  for (std::size_t i = 0; i < drift_breakpoints.size(); ++i) {
    const auto &p = drift_breakpoints[i];
    if (p.t_s < 0.0 || p.t_s > duration_s) throw Error("synth: drift breakpoint outside [0, duration]");
    if (i > 0 && !(p.t_s > drift_breakpoints[i - 1].t_s)) {
      throw Error("synth: drift breakpoint times must be strictly increasing");
    }
  }
  for (const auto &p : schedule(*this)) {
    if (!(p.mdf_hz > 0.0 && p.mdf_hz < nyquist)) throw Error("synth: MDF target outside (0, Nyquist)");
    if (!(p.mdf_hz - passband_halfwidth_hz > 0.0 && p.mdf_hz + passband_halfwidth_hz < nyquist)) {
      throw Error("synth: infeasible band (center +/- half-width outside (0, Nyquist))");
    }
  }
}

bool is_synth_key(const std::string &key) {
  static const char *const keys[] = {"duration_s",      "sample_rate_hz",        "mdf_start_hz",
                                     "mdf_end_hz",      "drift_breakpoints",     "passband_halfwidth_hz",
                                     "mains_amp",       "noise_snr_db",          "seed",
                                     "channels"};
  return std::find(std::begin(keys), std::end(keys), key) != std::end(keys);
}

void apply_synth_key(SynthSpec &spec, const std::string &key, const std::string &value) {
  if (key == "duration_s") {
    spec.duration_s = parse_double_value(key, value);
  } else if (key == "sample_rate_hz") {
    spec.sample_rate_hz = parse_double_value(key, value);
  } else if (key == "mdf_start_hz") {
    spec.mdf_start_hz = parse_double_value(key, value);
  } else if (key == "mdf_end_hz") {
    spec.mdf_end_hz = parse_double_value(key, value);
  } else if (key == "drift_breakpoints") {
    spec.drift_breakpoints = value.empty() ? std::vector<DriftPoint>{} : parse_breakpoints(value);
  } else if (key == "passband_halfwidth_hz") {
    spec.passband_halfwidth_hz = parse_double_value(key, value);
  } else if (key == "mains_amp") {
    spec.mains_amp = parse_double_value(key, value);
  } else if (key == "noise_snr_db") {
    spec.noise_snr_db = parse_double_value(key, value);
  } else if (key == "seed") {
    const long long s = parse_int_value(key, value);
    if (s < 0) throw ConfigError("seed must be non-negative");
    spec.seed = static_cast<std::uint64_t>(s);
  } else if (key == "channels") {
    spec.channels = static_cast<int>(parse_int_value(key, value));
  } else {
    throw ConfigError("unknown synth key '" + key + "'");
  }
}

SynthSpec load_synth_spec(const std::filesystem::path &path) {
  SynthSpec spec;
  for (const auto &kv : read_key_values(path)) {
    try {
      apply_synth_key(spec, kv.key, kv.value);
    } catch (const ConfigError &e) {
      throw ConfigError(path.string() + ": line " + std::to_string(kv.line) + ": " + e.what());
    }
  }
  try {
    spec.validate();
  } catch (const ConfigError &) {
    throw;
  } catch (const Error &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return spec;
}

double ground_truth_mdf(const SynthSpec &spec, double t_s) {
  if (!(t_s >= 0.0 && t_s <= spec.duration_s)) throw Error("ground_truth_mdf: time out of range");
  return interpolate(schedule(spec), t_s);
}

SignalRecording synth_emg(const SynthSpec &spec) {
  spec.validate();
  SignalRecording rec;
  rec.sample_rate_hz = spec.sample_rate_hz;
  for (int c = 0; c < spec.channels; ++c) {
    rec.channels.push_back({"ch" + std::to_string(c + 1), synth_channel(spec, c)});
  }
  return rec;
}

void write_ground_truth(const SynthSpec &spec, const std::filesystem::path &path, double step_s) {
  if (!(step_s > 0.0)) throw Error("ground truth step must be positive");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << "t_s,mdf_hz\n";
  double t = 0.0;
  for (std::size_t i = 0; t < spec.duration_s; t = static_cast<double>(++i) * step_s) {
    out << format_double(t) << ',' << format_double(ground_truth_mdf(spec, t)) << '\n';
  }
  out << format_double(spec.duration_s) << ','
      << format_double(ground_truth_mdf(spec, spec.duration_s)) << '\n';
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace wmf
