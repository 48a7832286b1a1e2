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

#include "wmfatigue/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wmfatigue/error.hpp"

namespace wmf {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view field = line.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    fields.push_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view text, const std::filesystem::path &path, std::size_t line_no) {
  double value = 0.0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw LoadError(path.string() + ": line " + std::to_string(line_no) + ": cannot parse number '" +
                    std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw LoadError(path.string() + ": line " + std::to_string(line_no) +
                    ": non-finite value '" + std::string(text) + "'");
  }
  return value;
}

// Reads all non-empty lines; line numbers are 1-based file lines.
struct CsvTable {
  std::vector<std::string_view> header;
  std::vector<std::pair<std::size_t, std::vector<double>>> rows;
  std::string storage;
};

CsvTable read_csv(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  CsvTable table;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  table.storage = buffer.str();

  std::string_view text(table.storage);
  std::size_t line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw LoadError(path.string() + ": line " + std::to_string(line_no) + ": expected " +
                      std::to_string(table.header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    std::vector<double> values;
    values.reserve(fields.size());
    for (auto f : fields) values.push_back(parse_number(f, path, line_no));
    table.rows.emplace_back(line_no, std::move(values));
  }
  if (!have_header) throw LoadError(path.string() + ": empty file");
  return table;
}

std::ofstream open_for_write(const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

void finish_write(std::ofstream &out, const std::filesystem::path &path) {
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

Json nullable(const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf, ptr);
}

SignalRecording load_recording(const std::filesystem::path &path) {
  CsvTable table = read_csv(path);
  if (table.header.size() < 2 || table.header[0] != "time_s") {
    throw LoadError(path.string() + ": malformed header, expected 'time_s,ch1,...,chN'");
  }
  std::set<std::string_view> seen;
  for (std::size_t c = 1; c < table.header.size(); ++c) {
    if (table.header[c].empty() || !seen.insert(table.header[c]).second) {
      throw LoadError(path.string() + ": malformed header, empty or duplicate channel label");
    }
  }
  if (table.rows.size() < 2) throw LoadError(path.string() + ": need at least 2 samples");

  const std::size_t n = table.rows.size();
  const double t0 = table.rows.front().second[0];
  const double t1 = table.rows.back().second[0];
  const double dt = (t1 - t0) / static_cast<double>(n - 1);
  if (!(dt > 0.0)) throw LoadError(path.string() + ": time column is not increasing");
  for (std::size_t i = 1; i < n; ++i) {
    const double step = table.rows[i].second[0] - table.rows[i - 1].second[0];
    if (std::abs(step - dt) > kUniformSamplingTolerance * dt) {
      throw LoadError(path.string() + ": line " + std::to_string(table.rows[i].first) +
                      ": non-uniform sampling");
    }
  }

  SignalRecording rec;
  // Snap to a micro-hertz grid so rates written as i/fs read back exactly.
  rec.sample_rate_hz = std::round(static_cast<double>(n - 1) / (t1 - t0) * 1e6) / 1e6;
  for (std::size_t c = 1; c < table.header.size(); ++c) {
    Channel ch;
    ch.label = std::string(table.header[c]);
    ch.samples.reserve(n);
    for (const auto &row : table.rows) ch.samples.push_back(row.second[c]);
    rec.channels.push_back(std::move(ch));
  }
  return rec;
}

void write_recording(const SignalRecording &recording, const std::filesystem::path &path) {
  recording.validate();
  auto out = open_for_write(path);
  std::string line = "time_s";
  for (const auto &ch : recording.channels) line += "," + ch.label;
  out << line << '\n';
  const std::size_t n = recording.num_samples();
  for (std::size_t i = 0; i < n; ++i) {
    line = format_double(static_cast<double>(i) / recording.sample_rate_hz);
    for (const auto &ch : recording.channels) {
      line += ',';
      line += format_double(ch.samples[i]);
    }
    out << line << '\n';
  }
  finish_write(out, path);
}

FeatureTrajectory load_trajectory(const std::filesystem::path &path) {
  CsvTable table = read_csv(path);
  if (table.header.size() != 2 || table.header[0] != "T_s" || table.header[1] != "F_hz") {
    throw LoadError(path.string() + ": malformed header, expected 'T_s,F_hz'");
  }
  FeatureTrajectory traj;
  traj.channel = path.stem().string();
  for (const auto &[line_no, row] : table.rows) {
    if (!traj.points.empty() && row[0] <= traj.points.back().t_s) {
      throw LoadError(path.string() + ": line " + std::to_string(line_no) +
                      ": times must be strictly increasing");
    }
    traj.points.push_back({row[0], row[1]});
  }
  return traj;
}

void write_trajectory(const FeatureTrajectory &trajectory, const std::filesystem::path &path) {
  auto out = open_for_write(path);
  out << "T_s,F_hz\n";
  for (const auto &p : trajectory.points) {
    out << format_double(p.t_s) << ',' << format_double(p.f_hz) << '\n';
  }
  finish_write(out, path);
}

AnnotationTrack load_annotations(const std::filesystem::path &path) {
  CsvTable table = read_csv(path);
  if (table.header.size() != 2 || table.header[0] != "time_s" || table.header[1] != "score") {
    throw LoadError(path.string() + ": malformed header, expected 'time_s,score'");
  }
  AnnotationTrack track;
  for (const auto &[line_no, row] : table.rows) {
    const double score = row[1];
    if (score != 0.0 && score != 1.0 && score != 2.0) {
      throw LoadError(path.string() + ": line " + std::to_string(line_no) +
                      ": score must be 0, 1 or 2");
    }
    track.events.push_back({row[0], static_cast<int>(score)});
  }
  try {
    track.validate();
  } catch (const Error &e) {
    throw LoadError(path.string() + ": " + e.what());
  }
  return track;
}

std::filesystem::path companion_csv_path(const std::filesystem::path &report_path) {
  std::filesystem::path p = report_path;
  p.replace_extension(".trajectory.csv");
  return p;
}

void write_report(const DetectionResult &result, const FeatureTrajectory &trajectory,
                  const std::filesystem::path &path, const AnnotationTrack *annotations) {
  if (trajectory.empty()) throw Error("empty trajectory");
  if (result.condition_trace.size() != trajectory.size()) {
    throw Error("detection result does not match trajectory");
  }

  Json params = Json::object();
  if (result.detector == DetectorKind::kWm) {
    params["delta_r"] = result.params.delta_r;
    params["f_th_hz"] = result.params.f_th_hz;
    params["wm_th"] = result.params.wm_th;
    params["baseline_window_s"] = result.params.baseline_window_s;
    params["bound_mode"] = to_string(result.params.bound_mode);
    if (result.params.bound_mode == BoundMode::kAbsolute) {
      params["delta_abs_hz"] = result.params.delta_abs_hz;
    }
    params["window_mode"] = to_string(result.params.window_mode);
    if (result.params.window_mode == WindowMode::kSliding) {
      params["window_len"] = result.params.window_len;
    }
  } else {
    params["theta_hz"] = result.params.f_th_hz;
    params["baseline_window_s"] = result.params.baseline_window_s;
  }

  // wm_trace starts at the second point; align it with the trajectory.
  std::vector<std::optional<double>> wm_by_point(trajectory.size());
  for (const auto &w : result.wm_trace) {
    for (std::size_t j = 0; j < trajectory.size(); ++j) {
      if (trajectory.points[j].t_s == w.t_s) {
        wm_by_point[j] = w.wm;
        break;
      }
    }
  }

  Json segments = Json::array();
  for (std::size_t j = 0; j < trajectory.size(); ++j) {
    const auto &c = result.condition_trace[j];
    Json seg;
    seg["T_s"] = trajectory.points[j].t_s;
    seg["F_hz"] = trajectory.points[j].f_hz;
    seg["wm"] = nullable(wm_by_point[j]);
    seg["eligible"] = c.eligible;
    seg["cond_freq"] = c.cond_freq;
    seg["cond_wm"] = c.cond_wm ? Json(*c.cond_wm) : Json(nullptr);
    segments.push_back(std::move(seg));
  }

  Json doc;
  doc["detector"] = to_string(result.detector);
  doc["detected"] = result.detected;
  doc["time_s"] = nullable(result.time_s);
  doc["params"] = std::move(params);
  doc["f_int_hz"] = result.f_int_hz;
  doc["channel"] = trajectory.channel;
  doc["band_index"] = trajectory.band_index > 0 ? Json(trajectory.band_index) : Json(nullptr);
  doc["segments"] = std::move(segments);
  if (annotations != nullptr) {
    Json events = Json::array();
    for (const auto &e : annotations->events) {
      events.push_back({{"time_s", e.time_s}, {"score", e.score}});
    }
    doc["annotations"] = std::move(events);
  }

  {
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
    finish_write(out, path);
  }

  const auto csv_path = companion_csv_path(path);
  auto out = open_for_write(csv_path);
  out << "T_s,F_hz,wm,eligible,cond_freq,cond_wm\n";
  for (std::size_t j = 0; j < trajectory.size(); ++j) {
    const auto &c = result.condition_trace[j];
    out << format_double(trajectory.points[j].t_s) << ',' << format_double(trajectory.points[j].f_hz)
        << ',' << (wm_by_point[j] ? format_double(*wm_by_point[j]) : std::string()) << ','
        << (c.eligible ? 1 : 0) << ',' << (c.cond_freq ? 1 : 0) << ','
        << (c.cond_wm ? std::to_string(*c.cond_wm ? 1 : 0) : std::string()) << '\n';
  }
  finish_write(out, csv_path);
}

}  // namespace wmf
