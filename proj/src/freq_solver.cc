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

#include "ilsmooth/freq_solver.h"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

namespace ilsmooth {

namespace internal {

// FFTW planning is not thread-safe; execution with the new-array interface is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

template <typename T>
struct FftwDeleter {
  void operator()(T* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwDeleter<T>>;

template <typename T>
FftwBuffer<T> AllocFftw(size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

struct FftPlans {
  FftPlans(int width, int height)
      : real_size(static_cast<size_t>(width) * height),
        complex_size(static_cast<size_t>(width / 2 + 1) * height) {
    auto real = AllocFftw<double>(real_size);
    auto spec = AllocFftw<fftw_complex>(complex_size);
    std::lock_guard<std::mutex> lock(PlannerMutex());
    forward = fftw_plan_dft_r2c_2d(height, width, real.get(), spec.get(),
                                   FFTW_ESTIMATE);
    inverse = fftw_plan_dft_c2r_2d(height, width, spec.get(), real.get(),
                                   FFTW_ESTIMATE);
    if (forward == nullptr || inverse == nullptr) {
      throw std::runtime_error("FFTW planning failed");
    }
  }
  ~FftPlans() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(inverse);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;

  size_t real_size;
  size_t complex_size;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

}  // namespace internal

namespace {

// conj of the transform of the forward difference u[n + 1] - u[n] along an
// axis of length n: exp(+2 pi i k / n) - 1, conjugated.
std::vector<std::complex<double>> DifferenceConj(int n) {
  std::vector<std::complex<double>> out(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    out[k] = std::complex<double>(std::cos(angle) - 1.0, -std::sin(angle));
  }
  return out;
}

// |exp(i a) - 1|^2 = 4 sin^2(a / 2), evaluated without cancellation.
double DifferencePower(int k, int n) {
  const double s = std::sin(std::numbers::pi * k / n);
  return 4.0 * s * s;
}

}  // namespace

FreqCache BuildCache(int width, int height, double lambda, double c) {
  if (width < 2 || height < 2) {
    throw DimensionError("solver needs at least 2x2 pixels, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("surrogate constant c must be positive and finite");
  }
  FreqCache cache;
  cache.width_ = width;
  cache.height_ = height;
  cache.spectrum_width_ = width / 2 + 1;
  cache.lambda_ = lambda;
  cache.c_ = c;
  cache.dx_conj_ = DifferenceConj(width);
  cache.dy_conj_ = DifferenceConj(height);

  const double scale = 0.5 * c * lambda;
  std::vector<double> px(cache.spectrum_width_);
  for (int kx = 0; kx < cache.spectrum_width_; ++kx) {
    px[kx] = DifferencePower(kx, width);
  }
  cache.denom_.resize(static_cast<size_t>(cache.spectrum_width_) * height);
  for (int ky = 0; ky < height; ++ky) {
    const double py = DifferencePower(ky, height);
    double* row = cache.denom_.data() + static_cast<size_t>(ky) * cache.spectrum_width_;
    for (int kx = 0; kx < cache.spectrum_width_; ++kx) {
      row[kx] = 1.0 + scale * (px[kx] + py);
    }
  }
  cache.plans_ = std::make_shared<internal::FftPlans>(width, height);
  return cache;
}

double FreqCache::Denom(int kx, int ky) const {
  if (kx >= spectrum_width_) {
    kx = width_ - kx;
    ky = (height_ - ky) % height_;
  }
  return denom_[static_cast<size_t>(ky) * spectrum_width_ + kx];
}

std::complex<double> FreqCache::DxConj(int kx, int /*ky*/) const {
  return dx_conj_[kx];
}

std::complex<double> FreqCache::DyConj(int /*kx*/, int ky) const {
  return dy_conj_[ky];
}

ImagePlane SolveIteration(const ImagePlane& f, const MuField& mu,
                          const FreqCache& cache) {
  const int w = cache.width_;
  const int h = cache.height_;
  if (f.width() != w || f.height() != h || !mu.mux.SameSize(f) ||
      !mu.muy.SameSize(f)) {
    throw DimensionError("solver inputs do not match the cached " +
                         std::to_string(w) + "x" + std::to_string(h) +
                         " frequency grid");
  }
  const internal::FftPlans& plans = *cache.plans_;
  const int sw = cache.spectrum_width_;

  auto real = internal::AllocFftw<double>(plans.real_size);
  auto spec_f = internal::AllocFftw<fftw_complex>(plans.complex_size);
  auto spec_x = internal::AllocFftw<fftw_complex>(plans.complex_size);
  auto spec_y = internal::AllocFftw<fftw_complex>(plans.complex_size);

  auto forward = [&](const ImagePlane& p, fftw_complex* out) {
    std::copy(p.values().begin(), p.values().end(), real.get());
    fftw_execute_dft_r2c(plans.forward, real.get(), out);
  };
  forward(f, spec_f.get());
  forward(mu.mux, spec_x.get());
  forward(mu.muy, spec_y.get());

  const double half_lambda = 0.5 * cache.lambda_;
  for (int ky = 0; ky < h; ++ky) {
    const std::complex<double> dy = cache.dy_conj_[ky];
    const size_t base = static_cast<size_t>(ky) * sw;
    for (int kx = 0; kx < sw; ++kx) {
      const size_t i = base + kx;
      const std::complex<double> ff(spec_f[i][0], spec_f[i][1]);
      const std::complex<double> fx(spec_x[i][0], spec_x[i][1]);
      const std::complex<double> fy(spec_y[i][0], spec_y[i][1]);
      const std::complex<double> v =
          (ff + half_lambda * (cache.dx_conj_[kx] * fx + dy * fy)) /
          cache.denom_[i];
      spec_f[i][0] = v.real();
      spec_f[i][1] = v.imag();
    }
  }
  fftw_execute_dft_c2r(plans.inverse, spec_f.get(), real.get());

  const double norm = 1.0 / (static_cast<double>(w) * h);
  std::vector<double> out(plans.real_size);
  for (size_t i = 0; i < out.size(); ++i) out[i] = real[i] * norm;
  return ImagePlane(w, h, std::move(out));
}

}  // namespace ilsmooth
