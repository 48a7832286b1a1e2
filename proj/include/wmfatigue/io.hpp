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
#include <string>

#include "wmfatigue/types.hpp"

namespace wmf {

// Relative tolerance on the spacing of the time column.
inline constexpr double kUniformSamplingTolerance = 1e-6;

// Reads a recording from CSV with header `time_s,<label1>,...,<labelN>`.
// The sample rate is inferred from the time column, which must be uniformly
// spaced. Throws LoadError naming the offending row on malformed input or on
// non-finite samples.
SignalRecording load_recording(const std::filesystem::path &path);

// Writes a recording in the format read by load_recording. Values are written
// with shortest round-trip formatting, so reloading is lossless.
void write_recording(const SignalRecording &recording, const std::filesystem::path &path);

// Trajectory CSV: header `T_s,F_hz`.
FeatureTrajectory load_trajectory(const std::filesystem::path &path);
void write_trajectory(const FeatureTrajectory &trajectory, const std::filesystem::path &path);

// Annotation CSV: header `time_s,score`, scores in {0,1,2}.
AnnotationTrack load_annotations(const std::filesystem::path &path);

// Writes the JSON report at `path` and a plot-ready CSV next to it
// (companion_csv_path(path)) with one row per trajectory point.
// Throws Error("empty trajectory") for an empty trajectory.
void write_report(const DetectionResult &result, const FeatureTrajectory &trajectory,
                  const std::filesystem::path &path,
                  const AnnotationTrack *annotations = nullptr);

// `report.json` -> `report.trajectory.csv`.
std::filesystem::path companion_csv_path(const std::filesystem::path &report_path);

// Formats a double with the shortest representation that round-trips.
std::string format_double(double value);

}  // namespace wmf
