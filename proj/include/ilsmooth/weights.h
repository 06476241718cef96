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

#ifndef ILSMOOTH_WEIGHTS_H_
#define ILSMOOTH_WEIGHTS_H_

// Structure-aware weights that turn gradients into guidance values.
//
// For each 1D scanline I the interval gradient at q is the difference between
// a normalized one-sided Gaussian mean over the pixels to the right of q
// (q+1 .. q+R) and one over the pixels to its left (q-R+1 .. q). On a clean
// edge it matches the pointwise gradient I[q+1] - I[q]; on an isolated detail
// the averaging dilutes it. Their ratio gamma in (0, 1] scores how much a
// pixel behaves like structure, and a sigmoid maps gamma to the weight omega.

#include <optional>
#include <span>
#include <vector>

#include "ilsmooth/image.h"

namespace ilsmooth {

struct IntervalGradientParams {
  double sigma = 3.0;                  // Gaussian scale in pixels, >= 1
  std::optional<double> sigma_s;       // transition sharpness; defaults to sigma
  double eps_s = 1e-4;                 // > 0
  std::optional<int> window_radius;    // defaults to ceil(3 sigma)

  double EffectiveSigmaS() const { return sigma_s.value_or(sigma); }
  int EffectiveWindowRadius() const;
  // Throws ParameterError on any out-of-domain field.
  void Validate() const;
};

// Per-axis weights in (0, 1]; wx is computed along rows, wy along columns.
struct WeightField {
  ImagePlane wx;
  ImagePlane wy;
};

struct IntervalGradient1d {
  std::vector<double> ig;  // interval gradient
  std::vector<double> fg;  // forward gradient I[q+1] - I[q], periodic
};

// Windows wrap periodically. Throws DimensionError if signal.size() < 2.
IntervalGradient1d IntervalGradient(std::span<const double> signal,
                                    const IntervalGradientParams& params);

// min(1, (|ig| + eps_s) / (|fg| + eps_s)) element-wise.
std::vector<double> StructureScore(std::span<const double> ig,
                                   std::span<const double> fg, double eps_s);

// 2 / (1 + exp(-(2 sigma_s + 1)(gamma - 1))). Throws ParameterError for gamma
// outside [0, 1].
std::vector<double> OmegaFromGamma(std::span<const double> gamma,
                                   double sigma_s);

// Runs the three steps along every row (wx) and every column (wy) of a guide
// in [0, 1].
WeightField BuildWeightField(const ImagePlane& guide,
                             const IntervalGradientParams& params);

}  // namespace ilsmooth

#endif  // ILSMOOTH_WEIGHTS_H_
