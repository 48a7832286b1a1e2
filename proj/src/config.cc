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

#include "wmfatigue/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wmfatigue/error.hpp"
#include "wmfatigue/filter.hpp"

namespace wmf {

namespace {

constexpr std::array<ConfigKey, 26> kSchema = {{
    {"bandpass.order", ValueType::kInt, "6", "Band-pass Butterworth order (2, 4, 6 or 8)"},
    {"bandpass.lo_hz", ValueType::kDouble, "10", "Band-pass lower cutoff in Hz"},
    {"bandpass.hi_hz", ValueType::kDouble, "500", "Band-pass upper cutoff in Hz"},
    {"bandstop.order", ValueType::kInt, "2", "Band-stop Butterworth order (2, 4, 6 or 8)"},
    {"bandstop.lo_hz", ValueType::kDouble, "49", "Band-stop lower cutoff in Hz"},
    {"bandstop.hi_hz", ValueType::kDouble, "51", "Band-stop upper cutoff in Hz"},
    {"outlier.k_sd", ValueType::kDouble, "3", "Outlier bound in standard deviations from the mean"},
    {"segment.len_s", ValueType::kDouble, "30", "Segment length in seconds (non-overlapping)"},
    {"filter.zero_phase", ValueType::kBool, "false", "Forward-backward filtering instead of causal"},
    {"wavelet.name", ValueType::kString, "db14", "Packet wavelet: db14, sym7 or coif2"},
    {"wavelet.depth", ValueType::kInt, "6", "Wavelet packet depth (2^depth bands)"},
    {"mdf.welch_window_s", ValueType::kDouble, "1", "Welch window length in seconds"},
    {"mdf.welch_overlap", ValueType::kDouble, "0.5", "Welch window overlap fraction"},
    {"mdf.f0_hz", ValueType::kDouble, "10", "Lower edge of the median-frequency range in Hz"},
    {"mdf.fs_hz", ValueType::kDouble, "150", "Upper edge of the median-frequency range in Hz"},
    {"anova.alpha", ValueType::kDouble, "0.05", "Significance level for band selection"},
    {"anova.probe_minutes", ValueType::kDoubleList, "1,7,14", "Probe minutes (1-based) for ANOVA"},
    {"wm.delta_r", ValueType::kDouble, "0.0083", "WM bound variation rate"},
    {"wm.f_th_hz", ValueType::kDouble, "1.25", "Frequency shift threshold in Hz"},
    {"wm.wm_th", ValueType::kDouble, "-0.5", "WM value threshold in [-1, 0]"},
    {"wm.baseline_window_s", ValueType::kDouble, "60", "Baseline window for the initial MMF"},
    {"wm.bound_mode", ValueType::kString, "relative", "WM bound: relative (delta_r * F) or absolute"},
    {"wm.delta_abs_hz", ValueType::kDouble, "0.5", "Fixed WM bound in Hz for bound_mode=absolute"},
    {"wm.window_mode", ValueType::kString, "cumulative", "WM window: cumulative or sliding"},
    {"wm.window_len", ValueType::kInt, "10", "Sliding WM window length in points"},
    {"threshold.theta_hz", ValueType::kDouble, "1.25", "Decline threshold of the conventional detector"},
}};

const ConfigKey *find_key(const std::string &key) {
  for (const auto &k : kSchema) {
    if (key == k.key) return &k;
  }
  return nullptr;
}

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void check_choice(const std::string &key, const std::string &value,
                  std::initializer_list<const char *> choices) {
  for (const char *c : choices) {
    if (value == c) return;
  }
  std::string msg = "invalid value '" + value + "' for " + key + " (expected one of:";
  for (const char *c : choices) msg += std::string(" ") + c;
  throw ConfigError(msg + ")");
}

// Constraints that involve a single key. Cross-key and sample-rate checks
// happen when the derived settings are built.
void check_range(const std::string &key, const std::string &text, double v) {
  auto fail = [&](const char *what) {
    throw ConfigError(key + " = " + text + ": must be " + what);
  };
  if (key == "bandpass.order" || key == "bandstop.order") {
    if (!(v == 2 || v == 4 || v == 6 || v == 8)) fail("one of 2, 4, 6, 8");
  } else if (key == "wavelet.depth") {
    if (!(v >= 1 && v <= kMaxPacketDepth)) fail("in [1, 8]");
  } else if (key == "wm.delta_r") {
    if (!(v >= 0.0 && v < 1.0)) fail("in [0, 1)");
  } else if (key == "wm.wm_th") {
    if (!(v >= -1.0 && v <= 0.0)) fail("in [-1, 0]");
  } else if (key == "mdf.welch_overlap") {
    if (!(v >= 0.0 && v < 1.0)) fail("in [0, 1)");
  } else if (key == "anova.alpha") {
    if (!(v > 0.0 && v <= 1.0)) fail("in (0, 1]");
  } else if (key == "wm.window_len") {
    if (!(v >= 2)) fail("at least 2");
  } else if (key == "wm.delta_abs_hz" || key == "mdf.f0_hz") {
    if (!(v >= 0.0)) fail("non-negative");
  } else {
    if (!(v > 0.0)) fail("positive");
  }
}

}  // namespace

double parse_double_value(const std::string &key, const std::string &value) {
  const std::string v = trim(value);
  double out = 0.0;
  const char *first = v.data();
  if (!v.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError("invalid number '" + value + "' for " + key);
  }
  return out;
}

long long parse_int_value(const std::string &key, const std::string &value) {
  const std::string v = trim(value);
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("invalid integer '" + value + "' for " + key);
  }
  return out;
}

bool parse_bool_value(const std::string &key, const std::string &value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("invalid boolean '" + value + "' for " + key);
}

std::vector<double> parse_double_list(const std::string &key, const std::string &value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double_value(key, item));
  if (out.empty()) throw ConfigError("empty list for " + key);
  return out;
}

std::vector<KeyValue> parse_key_values(const std::string &text, const std::string &source) {
  std::vector<KeyValue> out;
  std::stringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source + ": line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    KeyValue kv{trim(t.substr(0, eq)), trim(t.substr(eq + 1)), line_no};
    if (kv.key.empty()) {
      throw ConfigError(source + ": line " + std::to_string(line_no) + ": empty key");
    }
    out.push_back(std::move(kv));
  }
  return out;
}

std::vector<KeyValue> read_key_values(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str(), path.string());
}

RunConfig::RunConfig() {
  for (const auto &k : kSchema) values_[k.key] = k.default_value;
}

std::span<const ConfigKey> RunConfig::schema() { return kSchema; }

std::string RunConfig::flag_name(const std::string &key) {
  std::string flag = "--" + key;
  std::replace(flag.begin(), flag.end(), '_', '-');
  return flag;
}

void RunConfig::set(const std::string &key, const std::string &value) {
  const ConfigKey *k = find_key(key);
  if (k == nullptr) throw ConfigError("unknown config key '" + key + "'");
  const std::string v = trim(value);
  switch (k->type) {
    case ValueType::kInt:
      check_range(key, v, static_cast<double>(parse_int_value(key, v)));
      break;
    case ValueType::kDouble:
      check_range(key, v, parse_double_value(key, v));
      break;
    case ValueType::kBool:
      parse_bool_value(key, v);
      break;
    case ValueType::kDoubleList:
      parse_double_list(key, v);
      break;
    case ValueType::kString:
      if (key == "wavelet.name") check_choice(key, v, {"db14", "sym7", "coif2"});
      if (key == "wm.bound_mode") check_choice(key, v, {"relative", "absolute"});
      if (key == "wm.window_mode") check_choice(key, v, {"cumulative", "sliding"});
      break;
  }
  values_[key] = v;
}

void RunConfig::merge_file(const std::filesystem::path &path) {
  for (const auto &kv : read_key_values(path)) {
    try {
      set(kv.key, kv.value);
    } catch (const ConfigError &e) {
      throw ConfigError(path.string() + ": line " + std::to_string(kv.line) + ": " + e.what());
    }
  }
}

const std::string &RunConfig::get(const std::string &key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  return it->second;
}

double RunConfig::number(const std::string &key) const { return parse_double_value(key, get(key)); }

long long RunConfig::integer(const std::string &key) const { return parse_int_value(key, get(key)); }

bool RunConfig::flag(const std::string &key) const { return parse_bool_value(key, get(key)); }

std::vector<double> RunConfig::list(const std::string &key) const {
  return parse_double_list(key, get(key));
}

FeatureConfig RunConfig::feature_config() const {
  FeatureConfig c;
  c.preprocess.bandpass = {static_cast<int>(integer("bandpass.order")), number("bandpass.lo_hz"),
                           number("bandpass.hi_hz")};
  c.preprocess.bandstop = {static_cast<int>(integer("bandstop.order")), number("bandstop.lo_hz"),
                           number("bandstop.hi_hz")};
  c.preprocess.outlier_k_sd = number("outlier.k_sd");
  c.preprocess.segment_len_s = number("segment.len_s");
  c.preprocess.zero_phase = flag("filter.zero_phase");
  c.wavelet = parse_wavelet(get("wavelet.name"));
  c.depth = static_cast<int>(integer("wavelet.depth"));
  c.mdf.welch.window_s = number("mdf.welch_window_s");
  c.mdf.welch.overlap = number("mdf.welch_overlap");
  c.mdf.f_lo_hz = number("mdf.f0_hz");
  c.mdf.f_hi_hz = number("mdf.fs_hz");

  if (!(c.preprocess.outlier_k_sd > 0.0)) throw ConfigError("outlier.k_sd must be positive");
  if (!(c.preprocess.segment_len_s > 0.0)) throw ConfigError("segment.len_s must be positive");
  if (c.depth < 1 || c.depth > kMaxPacketDepth) throw ConfigError("wavelet.depth must be in [1, 8]");
  if (!(c.mdf.welch.window_s > 0.0)) throw ConfigError("mdf.welch_window_s must be positive");
  if (!(c.mdf.welch.overlap >= 0.0 && c.mdf.welch.overlap < 1.0)) {
    throw ConfigError("mdf.welch_overlap must be in [0, 1)");
  }
  if (!(c.mdf.f_lo_hz >= 0.0 && c.mdf.f_lo_hz < c.mdf.f_hi_hz)) {
    throw ConfigError("mdf range must satisfy 0 <= mdf.f0_hz < mdf.fs_hz");
  }
  return c;
}

WMParams RunConfig::wm_params() const {
  WMParams p;
  p.delta_r = number("wm.delta_r");
  p.f_th_hz = number("wm.f_th_hz");
  p.wm_th = number("wm.wm_th");
  p.baseline_window_s = number("wm.baseline_window_s");
  p.bound_mode = get("wm.bound_mode") == "absolute" ? BoundMode::kAbsolute : BoundMode::kRelative;
  p.delta_abs_hz = number("wm.delta_abs_hz");
  p.window_mode = get("wm.window_mode") == "sliding" ? WindowMode::kSliding : WindowMode::kCumulative;
  const long long len = integer("wm.window_len");
  if (len < 2) throw ConfigError("wm.window_len must be at least 2");
  p.window_len = static_cast<std::size_t>(len);
  try {
    p.validate();
  } catch (const Error &e) {
    throw ConfigError(e.what());
  }
  return p;
}

double RunConfig::theta_hz() const {
  const double t = number("threshold.theta_hz");
  if (!(t > 0.0)) throw ConfigError("threshold.theta_hz must be positive");
  return t;
}

double RunConfig::anova_alpha() const {
  const double a = number("anova.alpha");
  if (!(a > 0.0 && a <= 1.0)) throw ConfigError("anova.alpha must be in (0, 1]");
  return a;
}

std::vector<double> RunConfig::probe_minutes() const {
  auto m = list("anova.probe_minutes");
  for (double v : m) {
    if (!(v >= 1.0)) throw ConfigError("anova.probe_minutes are 1-based");
  }
  return m;
}

void RunConfig::validate_for(double sample_rate_hz) const {
  const FeatureConfig c = feature_config();
  try {
    design_butterworth(FilterKind::kBandpass, c.preprocess.bandpass.order, c.preprocess.bandpass.lo_hz,
                       c.preprocess.bandpass.hi_hz, sample_rate_hz);
    design_butterworth(FilterKind::kBandstop, c.preprocess.bandstop.order, c.preprocess.bandstop.lo_hz,
                       c.preprocess.bandstop.hi_hz, sample_rate_hz);
  } catch (const ConfigError &) {
    throw;
  } catch (const Error &e) {
    throw ConfigError(e.what());
  }
  if (c.mdf.f_lo_hz >= sample_rate_hz / 2.0) {
    throw ConfigError("mdf.f0_hz must be below the Nyquist frequency");
  }
}

std::string RunConfig::dump() const {
  std::string out;
  for (const auto &k : kSchema) out += std::string(k.key) + " = " + values_.at(k.key) + "\n";
  return out;
}

}  // namespace wmf
