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

// wmfatigue: batch sEMG fatigue pipeline.
// Exit codes: 0 ok, 1 no detection with --fail-on-miss, 2 usage or config
// error, 3 input data or processing error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wmfatigue/anova.hpp"
#include "wmfatigue/config.hpp"
#include "wmfatigue/error.hpp"
#include "wmfatigue/eval.hpp"
#include "wmfatigue/features.hpp"
#include "wmfatigue/io.hpp"
#include "wmfatigue/plot.hpp"
#include "wmfatigue/preprocess.hpp"
#include "wmfatigue/synth.hpp"
#include "wmfatigue/trend.hpp"
#include "wmfatigue/wavelet.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitMiss = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

void write_text(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw wmf::Error("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw wmf::Error("write failed for " + path.string());
}

fs::path truth_path(const fs::path &recording) {
  fs::path p = recording;
  p.replace_extension();
  return p.string() + ".truth.csv";
}

std::string key_help_footer() {
  std::ostringstream out;
  out << "Configuration keys (defaults -> $WMFATIGUE_CONFIG -> --config -> flags):\n";
  for (const auto &k : wmf::RunConfig::schema()) {
    out << "  " << k.key << " = " << k.default_value << "\n      " << k.help << "\n";
  }
  out << "\nSynth spec keys (synth --spec, eval/sweep --cohort):\n"
         "  duration_s, sample_rate_hz, mdf_start_hz, mdf_end_hz,\n"
         "  drift_breakpoints (t:mdf,t:mdf,...), passband_halfwidth_hz, mains_amp,\n"
         "  noise_snr_db, seed, channels\n"
         "Cohort keys (eval/sweep --cohort): cohort.size, cohort.band_index, cohort.channel\n"
         "Grid keys (sweep --grid): delta_r, f_th_hz, wm_th, snr_db (comma lists)\n"
         "\nExit codes: 0 ok, 1 no detection (--fail-on-miss), 2 usage/config error,\n"
         "3 input data or processing error.\n";
  return out.str();
}

struct Options {
  std::string config_file;
  std::map<std::string, std::string> flags;

  std::string input, out, channel, channels, detector = "wm", annotations, svg, spec, cohort,
                                                   trajectories, grid;
  int band = 0;
  bool fail_on_miss = false;
  bool raw = false;
};

wmf::RunConfig build_config(const Options &opt, const CLI::App &app) {
  wmf::RunConfig config;
  if (const char *env = std::getenv("WMFATIGUE_CONFIG"); env && *env) config.merge_file(env);
  if (!opt.config_file.empty()) config.merge_file(opt.config_file);
  for (const auto &k : wmf::RunConfig::schema()) {
    const std::string flag = wmf::RunConfig::flag_name(k.key);
    if (app.get_option(flag)->count() > 0) config.set(k.key, opt.flags.at(k.key));
  }
  return config;
}

int run_ingest(const Options &opt, const wmf::RunConfig &config) {
  const auto rec = wmf::load_recording(opt.input);
  config.validate_for(rec.sample_rate_hz);
  if (!opt.annotations.empty()) wmf::load_annotations(opt.annotations);
  std::cout << "channels: " << rec.channels.size() << "\nsamples: " << rec.num_samples()
            << "\nsample_rate_hz: " << wmf::format_double(rec.sample_rate_hz)
            << "\nduration_s: " << wmf::format_double(rec.duration_s()) << "\n";
  if (opt.out.empty()) return 0;
  wmf::SignalRecording out = rec;
  if (!opt.raw) {
    const auto feat = config.feature_config();
    for (auto &ch : out.channels) ch.samples = wmf::preprocess_channel(ch.samples, rec.sample_rate_hz, feat.preprocess);
  }
  wmf::write_recording(out, opt.out);
  return 0;
}

int run_features(const Options &opt, const wmf::RunConfig &config) {
  const auto rec = wmf::load_recording(opt.input);
  config.validate_for(rec.sample_rate_hz);
  const auto traj = wmf::feature_trajectory(rec, opt.channel, opt.band, config.feature_config());
  wmf::write_trajectory(traj, opt.out);
  std::cout << "segments: " << traj.size() << "\n";
  return 0;
}

int run_select_band(const Options &opt, const wmf::RunConfig &config) {
  const auto rec = wmf::load_recording(opt.input);
  config.validate_for(rec.sample_rate_hz);
  std::vector<std::string> channels;
  if (opt.channels.empty()) {
    for (const auto &ch : rec.channels) channels.push_back(ch.label);
  } else {
    std::stringstream ss(opt.channels);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) channels.push_back(item);
    }
  }
  const auto feat = config.feature_config();
  const auto probes = config.probe_minutes();
  const auto groups = wmf::probe_band_groups(rec, channels, feat, probes);
  const double alpha = config.anova_alpha();
  const auto ranked = wmf::anova_band_select(groups, alpha);
  const double width = wmf::band_width_hz(rec.sample_rate_hz, feat.depth);

  std::string csv = "channel,band_index,band_lo_hz,band_hi_hz,f_stat,p_value\n";
  for (const auto &r : ranked) {
    csv += r.channel + "," + std::to_string(r.band_index) + "," +
           wmf::format_double((r.band_index - 1) * width) + "," +
           wmf::format_double(r.band_index * width) + "," + wmf::format_double(r.f_stat) + "," +
           wmf::format_double(r.p_value) + "\n";
  }
  if (opt.out.empty()) {
    std::cout << csv;
  } else {
    write_text(opt.out, csv);
  }
  if (ranked.empty()) {
    std::cerr << "no band reaches significance at alpha = " << alpha << "\n";
  }
  return 0;
}

int run_detect(const Options &opt, const wmf::RunConfig &config) {
  const auto traj = wmf::load_trajectory(opt.input);
  std::optional<wmf::AnnotationTrack> annotations;
  if (!opt.annotations.empty()) annotations = wmf::load_annotations(opt.annotations);
  const auto params = config.wm_params();
  const auto result = opt.detector == "wm"
                          ? wmf::detect_wm(traj, params)
                          : wmf::detect_threshold(traj, config.theta_hz(), params.baseline_window_s);
  const wmf::AnnotationTrack *ann = annotations ? &*annotations : nullptr;
  wmf::write_report(result, traj, opt.out, ann);
  if (!opt.svg.empty()) wmf::write_svg(wmf::render_svg(traj, result, ann), opt.svg);
  if (result.detected) {
    std::cout << "detected at " << wmf::format_double(*result.time_s) << " s\n";
  } else {
    std::cout << "no detection\n";
  }
  return !result.detected && opt.fail_on_miss ? kExitMiss : 0;
}

int run_synth(const Options &opt) {
  const auto spec = wmf::load_synth_spec(opt.spec);
  const auto rec = wmf::synth_emg(spec);
  wmf::write_recording(rec, opt.out);
  wmf::write_ground_truth(spec, truth_path(opt.out));
  return 0;
}

std::vector<wmf::CohortMember> load_trajectory_dir(const fs::path &dir) {
  if (!fs::is_directory(dir)) throw wmf::LoadError(dir.string() + ": not a directory");
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<wmf::CohortMember> cohort;
  for (const auto &f : files) cohort.push_back({f.stem().string(), wmf::load_trajectory(f)});
  if (cohort.empty()) throw wmf::LoadError(dir.string() + ": no trajectory CSV files");
  return cohort;
}

int run_eval(const Options &opt, const wmf::RunConfig &config) {
  const auto params = config.wm_params();
  const auto feat = config.feature_config();
  std::vector<wmf::CohortMember> cohort;
  if (!opt.trajectories.empty()) {
    cohort = load_trajectory_dir(opt.trajectories);
  } else {
    const auto spec = wmf::load_cohort_spec(opt.cohort);
    config.validate_for(spec.subject.sample_rate_hz);
    cohort = wmf::synth_cohort(spec, feat);
  }
  const auto report = wmf::compare_detectors(cohort, params, config.theta_hz());
  fs::create_directories(opt.out);
  write_text(fs::path(opt.out) / "report.json", wmf::report_json(report, params, config.theta_hz()));
  const std::string table = wmf::report_table(report);
  write_text(fs::path(opt.out) / "table.txt", table);
  std::cout << table;
  return 0;
}

int run_sweep(const Options &opt, const wmf::RunConfig &config) {
  const auto grid = wmf::load_sweep_grid(opt.grid);
  const auto spec = wmf::load_cohort_spec(opt.cohort);
  config.validate_for(spec.subject.sample_rate_hz);
  const auto rows = wmf::sweep(grid, spec, config.feature_config(), config.wm_params());
  write_text(opt.out, wmf::sweep_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Weak-monotonicity muscle fatigue detection from sEMG recordings", "wmfatigue"};
  app.require_subcommand(1);
  app.footer(key_help_footer());

  Options opt;
  app.add_option("--config", opt.config_file, "key=value config file (applied after $WMFATIGUE_CONFIG)");
  for (const auto &k : wmf::RunConfig::schema()) {
    opt.flags[k.key];
  }
  for (const auto &k : wmf::RunConfig::schema()) {
    std::string names = wmf::RunConfig::flag_name(k.key);
    // Also accept the key spelled exactly as in config files.
    if (const std::string alias = std::string("--") + k.key; names != alias) names += "," + alias;
    app.add_option(names, opt.flags[k.key],
                   std::string(k.help) + " (default " + k.default_value + ")")
        ->option_text("VALUE")
        ->group("Configuration");
  }

  auto *ingest = app.add_subcommand("ingest", "Validate a recording; optionally write it preprocessed");
  ingest->add_option("--input", opt.input, "Recording CSV (time_s,<channels...>)")->required();
  ingest->add_option("--out", opt.out, "Write outlier-repaired, filtered recording CSV");
  ingest->add_option("--annotations", opt.annotations, "Annotation CSV (time_s,score) to validate");
  ingest->add_flag("--raw", opt.raw, "Copy samples without preprocessing");

  auto *features = app.add_subcommand("features", "Per-segment median-frequency trajectory");
  features->add_option("--input", opt.input, "Recording CSV")->required();
  features->add_option("--channel", opt.channel, "Channel label")->required();
  features->add_option("--band", opt.band, "Wavelet packet band (1-based, frequency ordered)")
      ->required()
      ->check(CLI::PositiveNumber);
  features->add_option("--out", opt.out, "Trajectory CSV (T_s,F_hz)")->required();

  auto *select = app.add_subcommand("select-band", "Rank (channel, band) pairs by one-way ANOVA");
  select->add_option("--input", opt.input, "Recording CSV")->required();
  select->add_option("--channels", opt.channels, "Comma-separated channel labels (default all)");
  select->add_option("--out", opt.out, "Ranking CSV (default stdout)");

  auto *detect = app.add_subcommand("detect", "Run a fatigue detector on a trajectory");
  detect->add_option("--input", opt.input, "Trajectory CSV (T_s,F_hz)")->required();
  detect->add_option("--detector", opt.detector, "wm or threshold")
      ->check(CLI::IsMember({"wm", "threshold"}));
  detect->add_option("--out", opt.out, "JSON report; a .trajectory.csv companion is written next to it")
      ->required();
  detect->add_option("--annotations", opt.annotations, "Annotation CSV to embed and plot");
  detect->add_option("--svg", opt.svg, "Static SVG plot of the trajectory and detection");
  detect->add_flag("--fail-on-miss", opt.fail_on_miss, "Exit 1 when nothing is detected");

  auto *synth = app.add_subcommand("synth", "Synthetic recording with a known MDF schedule");
  synth->add_option("--spec", opt.spec, "Synth spec (key=value)")->required();
  synth->add_option("--out", opt.out, "Recording CSV; ground truth goes to <stem>.truth.csv")->required();

  auto *eval = app.add_subcommand("eval", "Compare the WM and threshold detectors over a cohort");
  auto *traj_opt = eval->add_option("--trajectories", opt.trajectories, "Directory of trajectory CSVs");
  auto *cohort_opt = eval->add_option("--cohort", opt.cohort, "Synthetic cohort spec (key=value)");
  traj_opt->excludes(cohort_opt);
  eval->add_option("--out", opt.out, "Output directory (report.json, table.txt)")->required();

  auto *sweep = app.add_subcommand("sweep", "Detection/false-alarm rates over a parameter grid");
  sweep->add_option("--grid", opt.grid, "Grid file (delta_r, f_th_hz, wm_th, snr_db lists)")->required();
  sweep->add_option("--cohort", opt.cohort, "Synthetic cohort spec (key=value)")->required();
  sweep->add_option("--out", opt.out, "Sweep CSV")->required();

  for (auto *sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (eval->parsed() && opt.trajectories.empty() && opt.cohort.empty()) {
    std::cerr << "eval: one of --trajectories or --cohort is required\n" << eval->help();
    return kExitUsage;
  }

  wmf::RunConfig config;
  try {
    config = build_config(opt, app);
  } catch (const wmf::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n\n" << key_help_footer();
    return kExitUsage;
  } catch (const wmf::Error &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (ingest->parsed()) return run_ingest(opt, config);
    if (features->parsed()) return run_features(opt, config);
    if (select->parsed()) return run_select_band(opt, config);
    if (detect->parsed()) return run_detect(opt, config);
    if (synth->parsed()) return run_synth(opt);
    if (eval->parsed()) return run_eval(opt, config);
    if (sweep->parsed()) return run_sweep(opt, config);
  } catch (const wmf::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
