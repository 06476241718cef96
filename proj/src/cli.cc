// Copyright 2026 The ilsmooth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ilsmooth/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ilsmooth/apps.h"
#include "ilsmooth/image_io.h"
#include "ilsmooth/weights.h"

namespace ilsmooth::cli {

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes: 0 ok, 2 usage error, 3 I/O error, 4 parameter out of range, "
    "5 internal error.";

// Raw flag values; validated by ToSmoothing() and friends before any work.
struct SmoothingFlags {
  double lambda = 0.1;
  int iters = 2;
  double p = 0.8;
  double eps = 1e-4;
  double sigma = 3.0;
  std::optional<double> sigma_s;
  double eps_s = 1e-4;
  std::optional<int> window_radius;
  std::string mode = "weighted";
};

struct Config {
  SmoothingFlags smoothing;
  std::string input;
  std::string output;
  std::string output_y;  // weights: second map
  std::string dump_weights;
  double boost = 3.0;
  double compression = 0.6;
  double log_floor = 1e-6;
  bool normalize = false;
  std::string method = "both";
  std::string csv;
  int repeat = 3;
};

[[noreturn]] void BadFlag(const std::string& flag, const std::string& rule,
                          double value) {
  std::ostringstream msg;
  msg << flag << " " << rule << " (got " << value << ")";
  throw ParameterError(msg.str());
}

void AddSmoothingFlags(CLI::App* app, SmoothingFlags& f) {
  app->add_option("--lambda", f.lambda, "Smoothing strength, > 0")
      ->capture_default_str();
  app->add_option("--iters", f.iters, "Iterations N, >= 1")->capture_default_str();
  app->add_option("--p", f.p, "Norm power in (0, 1]")->capture_default_str();
  app->add_option("--eps", f.eps, "Penalty constant, > 0")->capture_default_str();
  app->add_option("--sigma", f.sigma, "Interval gradient scale, >= 1")
      ->capture_default_str();
  app->add_option("--sigma-s", f.sigma_s,
                  "Weight transition sharpness, > 0 (default: sigma)");
  app->add_option("--eps-s", f.eps_s, "Structure score constant, > 0")
      ->capture_default_str();
  app->add_option("--window-radius", f.window_radius,
                  "Interval window radius, >= 1 (default: ceil(3 sigma))");
  app->add_option("--mode", f.mode, "original or weighted")->capture_default_str();
}

SmoothingParams ToSmoothing(const SmoothingFlags& f) {
  if (!(f.lambda > 0.0) || !std::isfinite(f.lambda)) BadFlag("--lambda", "must be > 0", f.lambda);
  if (f.iters < 1) BadFlag("--iters", "must be >= 1", f.iters);
  if (!(f.p > 0.0 && f.p <= 1.0)) BadFlag("--p", "must lie in (0, 1]", f.p);
  if (!(f.eps > 0.0) || !std::isfinite(f.eps)) BadFlag("--eps", "must be > 0", f.eps);
  if (!(f.sigma >= 1.0) || !std::isfinite(f.sigma)) BadFlag("--sigma", "must be >= 1", f.sigma);
  if (f.sigma_s && (!(*f.sigma_s > 0.0) || !std::isfinite(*f.sigma_s))) {
    BadFlag("--sigma-s", "must be > 0", *f.sigma_s);
  }
  if (!(f.eps_s > 0.0) || !std::isfinite(f.eps_s)) BadFlag("--eps-s", "must be > 0", f.eps_s);
  if (f.window_radius && *f.window_radius < 1) {
    BadFlag("--window-radius", "must be >= 1", *f.window_radius);
  }
  SmoothingParams params;
  params.lambda = f.lambda;
  params.iterations = f.iters;
  params.p = f.p;
  params.eps = f.eps;
  params.interval.sigma = f.sigma;
  params.interval.sigma_s = f.sigma_s;
  params.interval.eps_s = f.eps_s;
  params.interval.window_radius = f.window_radius;
  if (f.mode == "weighted") {
    params.mode = SmoothingMode::kWeighted;
  } else if (f.mode == "original") {
    params.mode = SmoothingMode::kOriginal;
  } else {
    throw ParameterError("--mode must be original or weighted (got " + f.mode + ")");
  }
  return params;
}

// "dir/w.png" -> "dir/w_x.png", "dir/w_y.png".
std::pair<std::string, std::string> AxisPaths(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  const bool has_ext = dot != std::string::npos &&
                       (slash == std::string::npos || dot > slash);
  const std::string stem = has_ext ? path.substr(0, dot) : path;
  const std::string ext = has_ext ? path.substr(dot) : ".png";
  return {stem + "_x" + ext, stem + "_y" + ext};
}

void WriteWeights(const MultiChannelImage& img, const SmoothingParams& params,
                  const std::string& path_x, const std::string& path_y) {
  const WeightField field = BuildWeightField(Luminance(img), params.interval);
  SavePlanePng(field.wx, path_x);
  SavePlanePng(field.wy, path_y);
}

MultiChannelImage LoadWithWarnings(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  MultiChannelImage img = LoadImage(path, &warnings);
  for (const std::string& w : warnings) err << "ilsmooth: warning: " << w << "\n";
  return img;
}

void RequireUnit(const MultiChannelImage& img, const std::string& command) {
  if (img.range() != RangeTag::kUnit) {
    throw ParameterError(command + " needs a unit-range (PNG) input");
  }
}

void MaybeDumpWeights(const Config& cfg, const MultiChannelImage& img,
                      const SmoothingParams& params) {
  if (cfg.dump_weights.empty()) return;
  const auto [px, py] = AxisPaths(cfg.dump_weights);
  WriteWeights(img, params, px, py);
}

void RunSmooth(const Config& cfg, std::ostream& err) {
  const SmoothingParams params = ToSmoothing(cfg.smoothing);
  const MultiChannelImage img = LoadWithWarnings(cfg.input, err);
  RequireUnit(img, "smooth");
  MaybeDumpWeights(cfg, img, params);
  SaveImage(Smooth(img, params), cfg.output);
}

void RunEnhance(const Config& cfg, std::ostream& err) {
  EnhanceParams params;
  params.smoothing = ToSmoothing(cfg.smoothing);
  if (!(cfg.boost >= 0.0) || !std::isfinite(cfg.boost)) {
    BadFlag("--boost", "must be finite and >= 0", cfg.boost);
  }
  params.boost = cfg.boost;
  const MultiChannelImage img = LoadWithWarnings(cfg.input, err);
  RequireUnit(img, "enhance");
  MaybeDumpWeights(cfg, img, params.smoothing);
  SaveImage(Enhance(img, params), cfg.output);
}

void RunTonemap(const Config& cfg, std::ostream& err) {
  TonemapParams params;
  params.smoothing = ToSmoothing(cfg.smoothing);
  if (!(cfg.compression > 0.0 && cfg.compression <= 1.0)) {
    BadFlag("--compression", "must lie in (0, 1]", cfg.compression);
  }
  if (!(cfg.log_floor > 0.0) || !std::isfinite(cfg.log_floor)) {
    BadFlag("--log-floor", "must be > 0", cfg.log_floor);
  }
  params.compression = cfg.compression;
  params.log_floor = cfg.log_floor;
  params.normalize = cfg.normalize;
  MultiChannelImage img = LoadWithWarnings(cfg.input, err);
  if (img.range() != RangeTag::kHdr) {
    // 8-bit inputs are accepted as low-dynamic-range radiance.
    img = MultiChannelImage(img.channels(), RangeTag::kHdr);
  }
  SaveImage(Tonemap(img, params), cfg.output);
}

void RunWeights(const Config& cfg, std::ostream& err) {
  const SmoothingParams params = ToSmoothing(cfg.smoothing);
  const MultiChannelImage img = LoadWithWarnings(cfg.input, err);
  RequireUnit(img, "weights");
  WriteWeights(img, params, cfg.output, cfg.output_y);
}

void RunBench(const Config& cfg, std::ostream& out, std::ostream& err) {
  SmoothingParams params = ToSmoothing(cfg.smoothing);
  if (cfg.repeat < 1) BadFlag("--repeat", "must be >= 1", cfg.repeat);
  std::vector<SmoothingMode> methods;
  if (cfg.method == "original" || cfg.method == "both") {
    methods.push_back(SmoothingMode::kOriginal);
  }
  if (cfg.method == "weighted" || cfg.method == "both") {
    methods.push_back(SmoothingMode::kWeighted);
  }
  if (methods.empty()) {
    throw ParameterError("--method must be original, weighted or both (got " +
                         cfg.method + ")");
  }
  const MultiChannelImage img = LoadWithWarnings(cfg.input, err);
  RequireUnit(img, "bench");

  std::ostringstream csv;
  csv << kBenchCsvHeader << "\n";
  for (SmoothingMode m : methods) {
    params.mode = m;
    csv << FormatBenchRow(TimeSmoothing(img, params, cfg.repeat)) << "\n";
  }
  if (cfg.csv.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(cfg.csv, std::ios::trunc);
    if (!file) throw IoError("cannot open " + cfg.csv + " for writing");
    file << csv.str();
    file.close();
    if (!file) throw IoError("error writing " + cfg.csv);
  }
}

}  // namespace

BenchRecord TimeSmoothing(const MultiChannelImage& img, SmoothingParams params,
                          int repeat) {
  using Clock = std::chrono::steady_clock;
  params.record_energy = false;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(repeat, 1); ++r) {
    const auto start = Clock::now();
    const MultiChannelImage result = Smooth(img, params);
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  BenchRecord record;
  record.method = params.mode;
  record.lambda = params.lambda;
  record.iterations = params.iterations;
  record.sigma = params.interval.sigma;
  record.width = img.width();
  record.height = img.height();
  record.wall_time_total_s = best;
  record.wall_time_per_iter_s = best / params.iterations;
  return record;
}

std::string FormatBenchRow(const BenchRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%g,%d,%g,%d,%d,%.6f,%.6f",
                r.method == SmoothingMode::kOriginal ? "original" : "weighted",
                r.lambda, r.iterations, r.sigma, r.width, r.height,
                r.wall_time_total_s, r.wall_time_per_iter_s);
  return buf;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Edge-preserving image smoothing by iterative least squares",
               "ilsmooth"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  Config cfg;

  CLI::App* smooth = app.add_subcommand("smooth", "Smooth an 8-bit PNG");
  AddSmoothingFlags(smooth, cfg.smoothing);
  smooth->add_option("--dump-weights", cfg.dump_weights,
                     "Also write the x/y weight maps as <path>_x/_y PNGs");
  smooth->add_option("input", cfg.input, "Input PNG")->required();
  smooth->add_option("output", cfg.output, "Output PNG or PFM")->required();

  CLI::App* enhance = app.add_subcommand("enhance", "Detail enhancement");
  AddSmoothingFlags(enhance, cfg.smoothing);
  enhance->add_option("--boost", cfg.boost, "Detail multiplier, >= 0")
      ->capture_default_str();
  enhance->add_option("--dump-weights", cfg.dump_weights,
                      "Also write the x/y weight maps as <path>_x/_y PNGs");
  enhance->add_option("input", cfg.input, "Input PNG")->required();
  enhance->add_option("output", cfg.output, "Output PNG or PFM")->required();

  CLI::App* tonemap = app.add_subcommand("tonemap", "HDR tone mapping");
  AddSmoothingFlags(tonemap, cfg.smoothing);
  tonemap->add_option("--compression", cfg.compression,
                      "Base layer contrast scale in (0, 1]")
      ->capture_default_str();
  tonemap->add_option("--log-floor", cfg.log_floor, "Offset added before log10, > 0")
      ->capture_default_str();
  tonemap->add_flag("--normalize", cfg.normalize,
                    "Scale output luminance so its maximum is 1");
  tonemap->add_option("input", cfg.input, "Input PFM (or PNG)")->required();
  tonemap->add_option("output", cfg.output, "Output PNG or PFM")->required();

  CLI::App* bench = app.add_subcommand("bench", "Time smoothing (I/O excluded)");
  AddSmoothingFlags(bench, cfg.smoothing);
  bench->add_option("--method", cfg.method, "original, weighted or both")
      ->capture_default_str();
  bench->add_option("--csv", cfg.csv, "Write CSV here instead of stdout");
  bench->add_option("--repeat", cfg.repeat, "Runs per method; fastest is kept")
      ->capture_default_str();
  bench->add_option("input", cfg.input, "Input PNG")->required();

  CLI::App* weights = app.add_subcommand("weights", "Write the weight maps");
  AddSmoothingFlags(weights, cfg.smoothing);
  weights->add_option("input", cfg.input, "Input PNG")->required();
  weights->add_option("output_x", cfg.output, "Output PNG for x weights")->required();
  weights->add_option("output_y", cfg.output_y, "Output PNG for y weights")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ilsmooth: usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*smooth) {
      RunSmooth(cfg, err);
    } else if (*enhance) {
      RunEnhance(cfg, err);
    } else if (*tonemap) {
      RunTonemap(cfg, err);
    } else if (*bench) {
      RunBench(cfg, out, err);
    } else if (*weights) {
      RunWeights(cfg, err);
    }
  } catch (const IoError& e) {
    err << "ilsmooth: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const ParameterError& e) {
    err << "ilsmooth: parameter error: " << e.what() << "\n";
    return kParameter;
  } catch (const DimensionError& e) {
    err << "ilsmooth: parameter error: " << e.what() << "\n";
    return kParameter;
  } catch (const std::exception& e) {
    err << "ilsmooth: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace ilsmooth::cli
