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

#include "oracles.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace ilsmooth::oracle {

namespace {

int Mod(int i, int n) { return ((i % n) + n) % n; }

Eigen::MatrixXd DenseDx(int w, int h) {
  const int n = w * h;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      d(y * w + x, y * w + Mod(x + 1, w)) += 1.0;
      d(y * w + x, y * w + x) -= 1.0;
    }
  }
  return d;
}

Eigen::MatrixXd DenseDy(int w, int h) {
  const int n = w * h;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      d(y * w + x, Mod(y + 1, h) * w + x) += 1.0;
      d(y * w + x, y * w + x) -= 1.0;
    }
  }
  return d;
}

ComplexPlane ToComplex(const Plane& p) {
  return ComplexPlane(p.begin(), p.end());
}

ComplexPlane Dft(const ComplexPlane& in, int w, int h, double sign) {
  ComplexPlane out(in.size());
  for (int ky = 0; ky < h; ++ky) {
    for (int kx = 0; kx < w; ++kx) {
      std::complex<double> acc = 0.0;
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          const double angle = sign * 2.0 * std::numbers::pi *
                               (static_cast<double>(kx) * x / w +
                                static_cast<double>(ky) * y / h);
          acc += in[y * w + x] * std::polar(1.0, angle);
        }
      }
      out[ky * w + kx] = acc;
    }
  }
  return out;
}

}  // namespace

Plane RandomPlane(int w, int h, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Plane p(static_cast<size_t>(w) * h);
  for (double& v : p) v = dist(rng);
  return p;
}

void Gradients(const Plane& p, int w, int h, Plane& gx, Plane& gy) {
  gx.assign(p.size(), 0.0);
  gy.assign(p.size(), 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      gx[y * w + x] = p[y * w + Mod(x + 1, w)] - p[y * w + x];
      gy[y * w + x] = p[Mod(y + 1, h) * w + x] - p[y * w + x];
    }
  }
}

ComplexPlane Dft2d(const ComplexPlane& in, int w, int h) {
  return Dft(in, w, h, -1.0);
}

ComplexPlane Idft2d(const ComplexPlane& in, int w, int h) {
  ComplexPlane out = Dft(in, w, h, 1.0);
  for (auto& v : out) v /= static_cast<double>(w) * h;
  return out;
}

// (Dx u)[x] = u[x + 1] - u[x] = (k * u)[x] with k[0] = -1 and k[-1] = 1.
ComplexPlane DxTransform(int w, int h) {
  ComplexPlane k(static_cast<size_t>(w) * h, 0.0);
  k[0] = -1.0;
  k[w - 1] += 1.0;
  return Dft2d(k, w, h);
}

ComplexPlane DyTransform(int w, int h) {
  ComplexPlane k(static_cast<size_t>(w) * h, 0.0);
  k[0] = -1.0;
  k[static_cast<size_t>(h - 1) * w] += 1.0;
  return Dft2d(k, w, h);
}

Plane DenseSolve(const Plane& f, const Plane& mux, const Plane& muy, int w,
                 int h, double lambda, double c) {
  const int n = w * h;
  const Eigen::MatrixXd dx = DenseDx(w, h);
  const Eigen::MatrixXd dy = DenseDy(w, h);
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) +
                            0.5 * c * lambda * (dx.transpose() * dx + dy.transpose() * dy);
  const Eigen::Map<const Eigen::VectorXd> fv(f.data(), n);
  const Eigen::Map<const Eigen::VectorXd> mx(mux.data(), n);
  const Eigen::Map<const Eigen::VectorXd> my(muy.data(), n);
  const Eigen::VectorXd b = fv + 0.5 * lambda * (dx.transpose() * mx + dy.transpose() * my);
  const Eigen::VectorXd u = a.partialPivLu().solve(b);
  return Plane(u.data(), u.data() + n);
}

ComplexSolve SpectralSolve(const Plane& f, const Plane& mux, const Plane& muy,
                           int w, int h, double lambda, double c) {
  const ComplexPlane ff = Dft2d(ToComplex(f), w, h);
  const ComplexPlane fx = Dft2d(ToComplex(mux), w, h);
  const ComplexPlane fy = Dft2d(ToComplex(muy), w, h);
  const ComplexPlane dx = DxTransform(w, h);
  const ComplexPlane dy = DyTransform(w, h);
  ComplexPlane spectrum(ff.size());
  for (size_t i = 0; i < ff.size(); ++i) {
    const double denom = 1.0 + 0.5 * c * lambda * (std::norm(dx[i]) + std::norm(dy[i]));
    spectrum[i] = (ff[i] + 0.5 * lambda * (std::conj(dx[i]) * fx[i] +
                                           std::conj(dy[i]) * fy[i])) /
                  denom;
  }
  const ComplexPlane u = Idft2d(spectrum, w, h);
  ComplexSolve out;
  out.u.resize(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    out.u[i] = u[i].real();
    out.max_imag = std::max(out.max_imag, std::abs(u[i].imag()));
  }
  return out;
}

double SurrogateObjective(const Plane& u, const Plane& f, const Plane& mux,
                          const Plane& muy, int w, int h, double lambda,
                          double c) {
  Plane gx, gy;
  Gradients(u, w, h, gx, gy);
  const double sc = std::sqrt(c);
  double total = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    const double ex = sc * gx[i] - mux[i] / sc;
    const double ey = sc * gy[i] - muy[i] / sc;
    total += (u[i] - f[i]) * (u[i] - f[i]) + lambda * 0.5 * (ex * ex + ey * ey);
  }
  return total;
}

double Energy(const Plane& u, const Plane& f, int w, int h, double lambda,
              double p, double eps) {
  double total = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double here = u[y * w + x];
      const double dxv = u[y * w + Mod(x + 1, w)] - here;
      const double dyv = u[Mod(y + 1, h) * w + x] - here;
      const double r = here - f[y * w + x];
      total += r * r + lambda * (std::pow(dxv * dxv + eps, p / 2.0) +
                                 std::pow(dyv * dyv + eps, p / 2.0));
    }
  }
  return total;
}

double IntervalGradientAt(const std::vector<double>& signal, int q,
                          double sigma, int radius) {
  const int n = static_cast<int>(signal.size());
  auto weight = [sigma](int x) {
    return x >= 0 ? std::exp(-(x * x) / (2.0 * sigma * sigma)) : 0.0;
  };
  double kr = 0.0, kl = 0.0, gr = 0.0, gl = 0.0;
  for (int m = q - radius + 1; m <= q + radius; ++m) {
    const double value = signal[Mod(m, n)];
    const double wr = weight(m - q - 1);
    const double wl = weight(q - m);
    kr += wr;
    kl += wl;
    gr += wr * value;
    gl += wl * value;
  }
  return gr / kr - gl / kl;
}

double Gamma(double ig, double fg, double eps_s) {
  return std::min(1.0, (std::abs(ig) + eps_s) / (std::abs(fg) + eps_s));
}

double Omega(double gamma, double sigma_s) {
  return 2.0 * (1.0 / (1.0 + std::exp(-(2.0 * sigma_s + 1.0) * (gamma - 1.0))));
}

}  // namespace ilsmooth::oracle
