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

#include "ilsmooth/weights.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace ilsmooth {

namespace {

constexpr double kGuideTolerance = 1e-9;

// Precomputed one-sided Gaussian taps exp(-j^2 / 2 sigma^2), j = 0 .. R-1,
// and their sum (the normalizer of both windows).
struct SideKernel {
  std::vector<double> taps;
  double inv_norm = 0.0;
};

SideKernel MakeSideKernel(const IntervalGradientParams& params) {
  const int radius = params.EffectiveWindowRadius();
  SideKernel k;
  k.taps.resize(radius);
  double sum = 0.0;
  for (int j = 0; j < radius; ++j) {
    k.taps[j] = std::exp(-(j * j) / (2.0 * params.sigma * params.sigma));
    sum += k.taps[j];
  }
  k.inv_norm = 1.0 / sum;
  return k;
}

inline double Gamma(double ig, double fg, double eps_s) {
  return std::min(1.0, (std::abs(ig) + eps_s) / (std::abs(fg) + eps_s));
}

inline double Omega(double gamma, double slope) {
  return 2.0 / (1.0 + std::exp(-slope * (gamma - 1.0)));
}

// Interval and forward gradients of one periodic scanline. `ext` is scratch
// space; the line is copied into it with `radius` wrapped samples on each
// side so the window sums need no index arithmetic.
class ScanlineGradients {
 public:
  explicit ScanlineGradients(const SideKernel& kernel) : kernel_(kernel) {}

  template <typename Load>
  void Run(int n, Load load, double* ig, double* fg) {
    const int radius = static_cast<int>(kernel_.taps.size());
    ext_.resize(static_cast<size_t>(n) + 2 * radius);
    for (int i = -radius; i < n + radius; ++i) {
      int k = i % n;
      if (k < 0) k += n;
      ext_[i + radius] = load(k);
    }
    const double* line = ext_.data() + radius;
    const double* taps = kernel_.taps.data();
    for (int q = 0; q < n; ++q) {
      double right = 0.0;
      double left = 0.0;
      for (int j = 0; j < radius; ++j) {
        right += taps[j] * line[q + 1 + j];
        left += taps[j] * line[q - j];
      }
      ig[q] = (right - left) * kernel_.inv_norm;
      fg[q] = line[q + 1] - line[q];
    }
  }

 private:
  const SideKernel& kernel_;
  std::vector<double> ext_;
};

}  // namespace

int IntervalGradientParams::EffectiveWindowRadius() const {
  return window_radius.value_or(static_cast<int>(std::ceil(3.0 * sigma)));
}

void IntervalGradientParams::Validate() const {
  if (!(sigma >= 1.0) || !std::isfinite(sigma)) {
    throw ParameterError("sigma must be >= 1, got " + std::to_string(sigma));
  }
  const double ss = EffectiveSigmaS();
  if (!(ss > 0.0) || !std::isfinite(ss)) {
    throw ParameterError("sigma_s must be positive, got " + std::to_string(ss));
  }
  if (!(eps_s > 0.0) || !std::isfinite(eps_s)) {
    throw ParameterError("eps_s must be positive, got " + std::to_string(eps_s));
  }
  if (EffectiveWindowRadius() < 1) {
    throw ParameterError("window radius must be >= 1");
  }
}

IntervalGradient1d IntervalGradient(std::span<const double> signal,
                                    const IntervalGradientParams& params) {
  params.Validate();
  const int n = static_cast<int>(signal.size());
  if (n < 2) {
    throw DimensionError("interval gradient needs at least 2 samples, got " +
                         std::to_string(n));
  }
  const SideKernel kernel = MakeSideKernel(params);
  IntervalGradient1d out{std::vector<double>(n), std::vector<double>(n)};
  ScanlineGradients(kernel).Run(
      n, [&](int k) { return signal[k]; }, out.ig.data(), out.fg.data());
  return out;
}

std::vector<double> StructureScore(std::span<const double> ig,
                                   std::span<const double> fg, double eps_s) {
  if (ig.size() != fg.size()) {
    throw DimensionError("interval and forward gradients differ in length (" +
                         std::to_string(ig.size()) + " vs " +
                         std::to_string(fg.size()) + ")");
  }
  if (!(eps_s > 0.0)) throw ParameterError("eps_s must be positive");
  std::vector<double> gamma(ig.size());
  for (size_t i = 0; i < ig.size(); ++i) gamma[i] = Gamma(ig[i], fg[i], eps_s);
  return gamma;
}

std::vector<double> OmegaFromGamma(std::span<const double> gamma,
                                   double sigma_s) {
  if (!(sigma_s > 0.0) || !std::isfinite(sigma_s)) {
    throw ParameterError("sigma_s must be positive");
  }
  const double slope = 2.0 * sigma_s + 1.0;
  std::vector<double> omega(gamma.size());
  for (size_t i = 0; i < gamma.size(); ++i) {
    if (!(gamma[i] >= 0.0 && gamma[i] <= 1.0)) {
      throw ParameterError("gamma must lie in [0, 1], got " +
                           std::to_string(gamma[i]));
    }
    omega[i] = Omega(gamma[i], slope);
  }
  return omega;
}

WeightField BuildWeightField(const ImagePlane& guide,
                             const IntervalGradientParams& params) {
  params.Validate();
  RequireSmoothable(guide);
  for (double v : guide.values()) {
    if (v < -kGuideTolerance || v > 1.0 + kGuideTolerance) {
      throw ParameterError("weight guide must lie in [0, 1], got " +
                           std::to_string(v));
    }
  }
  const int w = guide.width();
  const int h = guide.height();
  const SideKernel kernel = MakeSideKernel(params);
  const double slope = 2.0 * params.EffectiveSigmaS() + 1.0;
  WeightField field{ImagePlane(w, h), ImagePlane(w, h)};
  ScanlineGradients scan(kernel);
  std::vector<double> ig(std::max(w, h));
  std::vector<double> fg(std::max(w, h));
  for (int y = 0; y < h; ++y) {
    const auto row = guide.Row(y);
    scan.Run(w, [&](int k) { return row[k]; }, ig.data(), fg.data());
    auto out = field.wx.Row(y);
    for (int x = 0; x < w; ++x) {
      out[x] = Omega(Gamma(ig[x], fg[x], params.eps_s), slope);
    }
  }
  for (int x = 0; x < w; ++x) {
    scan.Run(h, [&](int k) { return guide.at(x, k); }, ig.data(), fg.data());
    for (int y = 0; y < h; ++y) {
      field.wy.at(x, y) = Omega(Gamma(ig[y], fg[y], params.eps_s), slope);
    }
  }
  return field;
}

}  // namespace ilsmooth
