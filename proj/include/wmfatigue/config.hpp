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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wmfatigue/features.hpp"
#include "wmfatigue/types.hpp"

namespace wmf {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

// Parses `key = value` lines. Blank lines and lines starting with '#' are
// skipped; anything else without '=' is a ConfigError naming the line.
std::vector<KeyValue> parse_key_values(const std::string &text, const std::string &source);
std::vector<KeyValue> read_key_values(const std::filesystem::path &path);

// Parsers shared by every key=value consumer; they throw ConfigError.
double parse_double_value(const std::string &key, const std::string &value);
long long parse_int_value(const std::string &key, const std::string &value);
bool parse_bool_value(const std::string &key, const std::string &value);
std::vector<double> parse_double_list(const std::string &key, const std::string &value);

enum class ValueType { kInt, kDouble, kBool, kString, kDoubleList };

struct ConfigKey {
  const char *key;
  ValueType type;
  const char *default_value;
  const char *help;
};

// Pipeline settings merged from defaults, then a config file, then command
// line flags. Every key is checked against schema(); unknown keys and
// unparsable values raise ConfigError.
class RunConfig {
 public:
  RunConfig();

  static std::span<const ConfigKey> schema();
  // `wm.delta_r` -> `--wm.delta-r`.
  static std::string flag_name(const std::string &key);

  void set(const std::string &key, const std::string &value);
  void merge_file(const std::filesystem::path &path);
  const std::string &get(const std::string &key) const;

  double number(const std::string &key) const;
  long long integer(const std::string &key) const;
  bool flag(const std::string &key) const;
  std::vector<double> list(const std::string &key) const;

  FeatureConfig feature_config() const;
  WMParams wm_params() const;
  double theta_hz() const;
  double anova_alpha() const;
  std::vector<double> probe_minutes() const;

  // Cross-key checks that need the sample rate (filter cutoffs, MDF range).
  void validate_for(double sample_rate_hz) const;

  std::string dump() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace wmf
