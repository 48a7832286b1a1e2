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

#include <cstdint>
#include <filesystem>
#include <vector>

#include "wmfatigue/config.hpp"
#include "wmfatigue/types.hpp"

namespace wmf {

struct DriftPoint {
  double t_s = 0.0;
  double mdf_hz = 0.0;
};

// Synthetic sEMG-like recording: white Gaussian noise shaped per 1 s block
// by a band whose power profile is a raised-cosine bump centred on the
// target median frequency, so the analytic median equals the centre. Blocks
// overlap by half and are cross-faded with a sine window (squared windows sum
// to one), then mains interference and white measurement noise are added.
// The shaped signal has unit RMS.
struct SynthSpec {
  double duration_s = 900.0;
  double sample_rate_hz = 2148.0;
  double mdf_start_hz = 80.0;
  double mdf_end_hz = 80.0;
  // When non-empty, overrides the linear start -> end drift. Times strictly
  // increasing within [0, duration]; the schedule is held flat outside.
  std::vector<DriftPoint> drift_breakpoints;
  double passband_halfwidth_hz = 5.0;
  double mains_amp = 0.0;  // 50 Hz amplitude relative to the signal RMS
  double noise_snr_db = 20.0;
  std::uint64_t seed = 1;
  int channels = 1;

  void validate() const;
};

// Keys: duration_s, sample_rate_hz, mdf_start_hz, mdf_end_hz,
// drift_breakpoints (`t:mdf,t:mdf,...`), passband_halfwidth_hz, mains_amp,
// noise_snr_db, seed, channels.
void apply_synth_key(SynthSpec &spec, const std::string &key, const std::string &value);
bool is_synth_key(const std::string &key);
SynthSpec load_synth_spec(const std::filesystem::path &path);

// Analytic median frequency of the shaping band at time t (piecewise-linear
// drift schedule). Throws for t outside [0, duration].
double ground_truth_mdf(const SynthSpec &spec, double t_s);

// Deterministic for a given spec (including seed). Channels are labelled
// ch1..chN and draw independent noise.
SignalRecording synth_emg(const SynthSpec &spec);

// Sidecar CSV `t_s,mdf_hz` sampled every `step_s` seconds and at the end.
void write_ground_truth(const SynthSpec &spec, const std::filesystem::path &path,
                        double step_s = 1.0);

}  // namespace wmf
