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

#ifndef ILSMOOTH_ILS_H_
#define ILSMOOTH_ILS_H_

// Iterative least squares smoothing.
//
// Minimizes E(u) = sum_s (u_s - f_s)^2 + lambda sum_{*} phi_p(grad_* u_s) with
// phi_p(d) = (d^2 + eps)^(p/2) by repeatedly solving a quadratic majorizer
// whose curvature is c = p eps^(p/2 - 1). In weighted mode the penalty
// argument is the guidance value omega * grad u instead of the raw gradient,
// with omega fixed from the input image.

#include <chrono>
#include <vector>

#include "ilsmooth/freq_solver.h"
#include "ilsmooth/image.h"
#include "ilsmooth/weights.h"

namespace ilsmooth {

enum class SmoothingMode {
  kOriginal,
  kWeighted,
};

struct SmoothingParams {
  double lambda = 0.1;  // smoothing strength, > 0
  double p = 0.8;       // norm power in (0, 1]
  double eps = 1e-4;    // penalty constant, > 0
  int iterations = 2;   // >= 1
  SmoothingMode mode = SmoothingMode::kWeighted;
  IntervalGradientParams interval;  // used only in weighted mode
  // Evaluate the objective after every original-mode iteration.
  bool record_energy = true;

  // p * eps^(p/2 - 1); about 200.95 for the defaults.
  double SurrogateConstant() const;
  // Throws ParameterError on any out-of-domain field.
  void Validate() const;
};

struct SmoothingReport {
  // E(u^{n+1}) after every iteration; filled in original mode only.
  std::vector<double> energies;
  std::vector<std::chrono::duration<double>> wall_times;
  int iterations_run = 0;
};

struct SmoothedPlane {
  ImagePlane u;
  SmoothingReport report;
};

// (d^2 + eps)^(p/2). Throws ParameterError if |d| > 1 + 1e-9.
double Penalty(double d, double p, double eps);

// c g - p g (g^2 + eps)^(p/2 - 1). Throws ParameterError if |g| > 1 + 1e-9.
double MuUpdate(double g, double p, double eps, double c);

// The objective above evaluated at u (raw gradients, periodic boundary).
double Energy(const ImagePlane& u, const ImagePlane& f,
              const SmoothingParams& params);

// Runs params.iterations solves from u^0 = f (values in [0, 1]) and clamps
// the result to [0, 1]. `weights` must be non-null exactly when params.mode is kWeighted.
SmoothedPlane SmoothPlane(const ImagePlane& f, const SmoothingParams& params,
                          const WeightField* weights = nullptr);

// Same, reusing a cache built for f's size, params.lambda and
// params.SurrogateConstant().
SmoothedPlane SmoothPlane(const ImagePlane& f, const SmoothingParams& params,
                          const WeightField* weights, const FreqCache& cache);

// Smooths every channel of a unit-range image. Weighted mode shares one
// weight field computed from the luminance of img across all channels.
MultiChannelImage Smooth(const MultiChannelImage& img,
                         const SmoothingParams& params);

}  // namespace ilsmooth

#endif  // ILSMOOTH_ILS_H_
