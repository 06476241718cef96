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

#ifndef ILSMOOTH_FREQ_SOLVER_H_
#define ILSMOOTH_FREQ_SOLVER_H_

// Closed-form solve of the per-iteration quadratic
//
//   sum_s (u_s - f_s)^2 + lambda * sum_{* in x,y} 1/2 (sqrt(c) D_* u - mu_* / sqrt(c))_s^2
//
// whose normal equations (I + c lambda / 2 (Dx'Dx + Dy'Dy)) u =
// f + lambda / 2 (Dx' mu_x + Dy' mu_y) are diagonal in the 2D DFT basis under
// the periodic boundary. Transforms use the unnormalized forward convention
// X[k] = sum_n x[n] exp(-2 pi i k n / N).

#include <complex>
#include <memory>
#include <vector>

#include "ilsmooth/image.h"

namespace ilsmooth {

// Per-axis auxiliary fields of the surrogate quadratic.
struct MuField {
  ImagePlane mux;
  ImagePlane muy;
};

namespace internal {
struct FftPlans;
}  // namespace internal

// Immutable, shareable across threads and channels of the same size.
class FreqCache {
 public:
  int width() const { return width_; }
  int height() const { return height_; }
  double lambda() const { return lambda_; }
  double c() const { return c_; }

  // 1 + (c lambda / 2)(|F(Dx)|^2 + |F(Dy)|^2) at frequency bin (kx, ky),
  // 0 <= kx < width, 0 <= ky < height.
  double Denom(int kx, int ky) const;
  // conj(F(Dx)) and conj(F(Dy)) at bin (kx, ky).
  std::complex<double> DxConj(int kx, int ky) const;
  std::complex<double> DyConj(int kx, int ky) const;

 private:
  friend FreqCache BuildCache(int width, int height, double lambda, double c);
  friend ImagePlane SolveIteration(const ImagePlane& f, const MuField& mu,
                                   const FreqCache& cache);

  int width_ = 0;
  int height_ = 0;
  int spectrum_width_ = 0;  // width / 2 + 1 bins stored per row
  double lambda_ = 0.0;
  double c_ = 0.0;
  // height x spectrum_width half spectrum; the rest follows from the
  // Hermitian symmetry of real inputs.
  std::vector<double> denom_;
  std::vector<std::complex<double>> dx_conj_;  // indexed by kx in [0, width)
  std::vector<std::complex<double>> dy_conj_;  // indexed by ky in [0, height)
  std::shared_ptr<const internal::FftPlans> plans_;
};

// Throws DimensionError for width or height < 2 and ParameterError unless
// lambda > 0 and c > 0 (both finite).
FreqCache BuildCache(int width, int height, double lambda, double c);

// Unique minimizer of the quadratic above. Throws DimensionError if f, mu and
// cache sizes disagree.
ImagePlane SolveIteration(const ImagePlane& f, const MuField& mu,
                          const FreqCache& cache);

}  // namespace ilsmooth

#endif  // ILSMOOTH_FREQ_SOLVER_H_
