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

// Static SVG: the trajectory, the baseline F_int and the frequency threshold
// as horizontal lines, a vertical marker at the detection time, and the
// annotation score as a step line on a secondary axis when given.
std::string render_svg(const FeatureTrajectory &trajectory, const DetectionResult &result,
                       const AnnotationTrack *annotations = nullptr);

void write_svg(const std::string &svg, const std::filesystem::path &path);

}  // namespace wmf
