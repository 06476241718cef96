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

#include "ilsmooth/ils.h"

#include <cassert>
#include <cmath>
#include <string>

namespace ilsmooth {

namespace {

constexpr double kGradientSlack = 1e-9;
constexpr double kUnitSlack = 1e-9;

void CheckGradientDomain(double g, const char* what) {
  if (!(std::abs(g) <= 1.0 + kGradientSlack)) {
    throw ParameterError(std::string(what) + " argument must satisfy |d| <= 1, got " +
                         std::to_string(g));
  }
}

// Fills mu with c*id - phi'(id), id = omega * grad u (omega == nullptr means
// omega = 1).
void ComputeMu(const ImagePlane& u, const WeightField* weights,
               const SmoothingParams& params, double c, MuField& mu) {
  const int w = u.width();
  const int h = u.height();
  const double p = params.p;
  const double eps = params.eps;
  const double exponent = 0.5 * p - 1.0;
  auto mu_of = [&](double id) {
    assert(std::abs(id) <= 1.0 + 1e-6);
    return c * id - p * id * std::pow(id * id + eps, exponent);
  };
  for (int y = 0; y < h; ++y) {
    const auto row = u.Row(y);
    const auto below = u.Row(y + 1 == h ? 0 : y + 1);
    auto mux = mu.mux.Row(y);
    auto muy = mu.muy.Row(y);
    for (int x = 0; x < w; ++x) {
      double gx = row[x + 1 == w ? 0 : x + 1] - row[x];
      double gy = below[x] - row[x];
      if (weights != nullptr) {
        gx *= weights->wx.at(x, y);
        gy *= weights->wy.at(x, y);
      }
      mux[x] = mu_of(gx);
      muy[x] = mu_of(gy);
    }
  }
}

void CheckWeights(const ImagePlane& f, const SmoothingParams& params,
                  const WeightField* weights) {
  if (params.mode == SmoothingMode::kWeighted) {
    if (weights == nullptr) {
      throw ParameterError("weighted mode requires a weight field");
    }
    if (!weights->wx.SameSize(f) || !weights->wy.SameSize(f)) {
      throw DimensionError("weight field size does not match the image");
    }
  } else if (weights != nullptr) {
    throw ParameterError("original mode does not take a weight field");
  }
}

}  // namespace

double SmoothingParams::SurrogateConstant() const {
  return p * std::pow(eps, 0.5 * p - 1.0);
}

void SmoothingParams::Validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be > 0, got " + std::to_string(lambda));
  }
  if (!(p > 0.0 && p <= 1.0)) {
    throw ParameterError("p must lie in (0, 1], got " + std::to_string(p));
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ParameterError("eps must be > 0, got " + std::to_string(eps));
  }
  if (iterations < 1) {
    throw ParameterError("iterations must be >= 1, got " +
                         std::to_string(iterations));
  }
  if (mode == SmoothingMode::kWeighted) interval.Validate();
}

double Penalty(double d, double p, double eps) {
  CheckGradientDomain(d, "penalty");
  return std::pow(d * d + eps, 0.5 * p);
}

double MuUpdate(double g, double p, double eps, double c) {
  CheckGradientDomain(g, "mu update");
  return c * g - p * g * std::pow(g * g + eps, 0.5 * p - 1.0);
}

double Energy(const ImagePlane& u, const ImagePlane& f,
              const SmoothingParams& params) {
  if (!u.SameSize(f)) throw DimensionError("energy arguments differ in size");
  const GradientPair g = ForwardGradients(u);
  const double half_p = 0.5 * params.p;
  double data = 0.0;
  double smooth = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    const double r = u[i] - f[i];
    data += r * r;
    smooth += std::pow(g.gx[i] * g.gx[i] + params.eps, half_p) +
              std::pow(g.gy[i] * g.gy[i] + params.eps, half_p);
  }
  return data + params.lambda * smooth;
}

SmoothedPlane SmoothPlane(const ImagePlane& f, const SmoothingParams& params,
                          const WeightField* weights) {
  params.Validate();
  RequireSmoothable(f);
  const FreqCache cache = BuildCache(f.width(), f.height(), params.lambda,
                                     params.SurrogateConstant());
  return SmoothPlane(f, params, weights, cache);
}

SmoothedPlane SmoothPlane(const ImagePlane& f, const SmoothingParams& params,
                          const WeightField* weights, const FreqCache& cache) {
  using Clock = std::chrono::steady_clock;
  params.Validate();
  RequireSmoothable(f);
  CheckWeights(f, params, weights);
  for (double v : f.values()) {
    if (v < -kUnitSlack || v > 1.0 + kUnitSlack) {
      throw ParameterError("smoothing input must lie in [0, 1], got " +
                           std::to_string(v));
    }
  }
  if (cache.width() != f.width() || cache.height() != f.height()) {
    throw DimensionError("frequency cache was built for a different size");
  }
  const double c = params.SurrogateConstant();
  const bool track_energy =
      params.record_energy && params.mode == SmoothingMode::kOriginal;

  SmoothedPlane result{f, {}};
  SmoothingReport& report = result.report;
  MuField mu{ImagePlane(f.width(), f.height()),
             ImagePlane(f.width(), f.height())};
  for (int n = 0; n < params.iterations; ++n) {
    const auto start = Clock::now();
    ComputeMu(result.u, weights, params, c, mu);
    result.u = SolveIteration(f, mu, cache);
    report.wall_times.push_back(Clock::now() - start);
    if (track_energy) report.energies.push_back(Energy(result.u, f, params));
    ++report.iterations_run;
  }
  result.u = ClampUnit(result.u);
  return result;
}

MultiChannelImage Smooth(const MultiChannelImage& img,
                         const SmoothingParams& params) {
  params.Validate();
  if (img.range() != RangeTag::kUnit) {
    throw ParameterError("smoothing requires a unit-range image");
  }
  if (img.num_channels() == 0) throw DimensionError("image has no channels");
  RequireSmoothable(img.channel(0));
  const FreqCache cache = BuildCache(img.width(), img.height(), params.lambda,
                                     params.SurrogateConstant());
  WeightField field;
  const WeightField* weights = nullptr;
  if (params.mode == SmoothingMode::kWeighted) {
    field = BuildWeightField(Luminance(img), params.interval);
    weights = &field;
  }
  std::vector<ImagePlane> out;
  out.reserve(img.num_channels());
  for (const ImagePlane& channel : img.channels()) {
    out.push_back(SmoothPlane(channel, params, weights, cache).u);
  }
  return MultiChannelImage(std::move(out), RangeTag::kUnit);
}

}  // namespace ilsmooth
