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

#include "wmfatigue/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wmfatigue/error.hpp"

namespace wmf {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 360.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 50.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 45.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Axis {
  double lo, hi, px_lo, px_hi;
  double map(double v) const {
    if (hi == lo) return 0.5 * (px_lo + px_hi);
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

void line(std::ostringstream &out, double x1, double y1, double x2, double y2, const char *style) {
  out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\""
      << num(y2) << "\" " << style << "/>\n";
}

void text(std::ostringstream &out, double x, double y, const std::string &s, const char *anchor) {
  out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << s << "</text>\n";
}

}  // namespace

std::string render_svg(const FeatureTrajectory &trajectory, const DetectionResult &result,
                       const AnnotationTrack *annotations) {
  if (trajectory.empty()) throw Error("cannot plot an empty trajectory");
  const auto &pts = trajectory.points;

  double t_max = pts.back().t_s;
  double f_lo = pts.front().f_hz, f_hi = pts.front().f_hz;
  for (const auto &p : pts) {
    f_lo = std::min(f_lo, p.f_hz);
    f_hi = std::max(f_hi, p.f_hz);
  }
  // Threshold results carry theta in params.f_th_hz.
  const double threshold = result.f_int_hz - result.params.f_th_hz;
  f_lo = std::min({f_lo, threshold, result.f_int_hz});
  f_hi = std::max(f_hi, result.f_int_hz);
  const double pad = std::max(0.05 * (f_hi - f_lo), 0.5);
  f_lo -= pad;
  f_hi += pad;
  if (annotations) {
    for (const auto &e : annotations->events) t_max = std::max(t_max, e.time_s);
  }

  const Axis x{0.0, t_max, kLeft, kWidth - kRight};
  const Axis y{f_lo, f_hi, kHeight - kBottom, kTop};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  line(out, kLeft, kHeight - kBottom, kWidth - kRight, kHeight - kBottom, "stroke=\"black\"");
  line(out, kLeft, kTop, kLeft, kHeight - kBottom, "stroke=\"black\"");
  for (int i = 0; i <= 4; ++i) {
    const double tv = t_max * i / 4.0;
    const double fv = f_lo + (f_hi - f_lo) * i / 4.0;
    text(out, x.map(tv), kHeight - kBottom + 15, num(tv), "middle");
    text(out, kLeft - 5, y.map(fv) + 4, num(fv), "end");
  }
  text(out, 0.5 * (kLeft + kWidth - kRight), kHeight - 8, "time (s)", "middle");
  text(out, 12, kTop - 10, "MDF (Hz)", "start");

  line(out, kLeft, y.map(result.f_int_hz), kWidth - kRight, y.map(result.f_int_hz),
       "stroke=\"gray\" stroke-dasharray=\"6,3\"");
  line(out, kLeft, y.map(threshold), kWidth - kRight, y.map(threshold),
       "stroke=\"darkorange\" stroke-dasharray=\"2,3\"");
  text(out, kWidth - kRight - 2, y.map(result.f_int_hz) - 4, "F_int", "end");
  text(out, kWidth - kRight - 2, y.map(threshold) - 4, "F_int - f_th", "end");

  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i ? " " : "") << num(x.map(pts[i].t_s)) << "," << num(y.map(pts[i].f_hz));
  }
  out << "\"/>\n";
  for (const auto &p : pts) {
    out << "<circle cx=\"" << num(x.map(p.t_s)) << "\" cy=\"" << num(y.map(p.f_hz))
        << "\" r=\"2.5\" fill=\"steelblue\"/>\n";
  }

  if (annotations && !annotations->events.empty()) {
    int s_lo = annotations->events.front().score, s_hi = s_lo;
    for (const auto &e : annotations->events) {
      s_lo = std::min(s_lo, e.score);
      s_hi = std::max(s_hi, e.score);
    }
    const Axis ys{static_cast<double>(s_lo) - 0.5, static_cast<double>(s_hi) + 0.5,
                  kHeight - kBottom, kTop};
    out << "<polyline fill=\"none\" stroke=\"seagreen\" stroke-width=\"1\" points=\"";
    const auto &ev = annotations->events;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      const double next_t = i + 1 < ev.size() ? ev[i + 1].time_s : t_max;
      out << (i ? " " : "") << num(x.map(ev[i].time_s)) << "," << num(ys.map(ev[i].score)) << " "
          << num(x.map(next_t)) << "," << num(ys.map(ev[i].score));
    }
    out << "\"/>\n";
    for (int s = s_lo; s <= s_hi; ++s) {
      text(out, kWidth - kRight + 5, ys.map(s) + 4, std::to_string(s), "start");
    }
  }

  if (result.detected) {
    const double td = *result.time_s;
    line(out, x.map(td), kTop, x.map(td), kHeight - kBottom, "stroke=\"crimson\" stroke-width=\"1.5\"");
    text(out, x.map(td) + 4, kTop + 12,
         std::string(to_string(result.detector)) + " detection at " + num(td) + " s", "start");
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const std::string &svg, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << svg;
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace wmf
