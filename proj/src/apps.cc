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

#include "ilsmooth/apps.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ilsmooth/weights.h"

namespace ilsmooth {

namespace {

void ValidateTonemap(const TonemapParams& params) {
  if (!(params.compression > 0.0 && params.compression <= 1.0)) {
    throw ParameterError("compression must lie in (0, 1], got " +
                         std::to_string(params.compression));
  }
  if (!(params.log_floor > 0.0) || !std::isfinite(params.log_floor)) {
    throw ParameterError("log floor must be > 0, got " +
                         std::to_string(params.log_floor));
  }
  params.smoothing.Validate();
}

}  // namespace

MultiChannelImage Enhance(const MultiChannelImage& img,
                          const EnhanceParams& params) {
  if (!(params.boost >= 0.0) || !std::isfinite(params.boost)) {
    throw ParameterError("boost must be finite and >= 0, got " +
                         std::to_string(params.boost));
  }
  const MultiChannelImage base = Smooth(img, params.smoothing);
  std::vector<ImagePlane> out;
  out.reserve(img.num_channels());
  for (int c = 0; c < img.num_channels(); ++c) {
    const ImagePlane& in = img.channel(c);
    ImagePlane plane = base.channel(c);
    for (size_t i = 0; i < plane.size(); ++i) {
      plane[i] = std::clamp(plane[i] + params.boost * (in[i] - plane[i]), 0.0, 1.0);
    }
    out.push_back(std::move(plane));
  }
  return MultiChannelImage(std::move(out), RangeTag::kUnit);
}

TonemapLayers DecomposeLuminance(const ImagePlane& luminance,
                                 const TonemapParams& params) {
  ValidateTonemap(params);
  RequireSmoothable(luminance);
  const int w = luminance.width();
  const int h = luminance.height();

  TonemapLayers layers;
  layers.log_luminance = ImagePlane(w, h);
  double lo = INFINITY;
  double hi = -INFINITY;
  for (size_t i = 0; i < luminance.size(); ++i) {
    if (luminance[i] < 0.0) {
      throw ParameterError("tone mapping input has negative value " +
                           std::to_string(luminance[i]));
    }
    const double v = std::log10(luminance[i] + params.log_floor);
    layers.log_luminance[i] = v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  layers.log_min = lo;
  layers.log_range = hi - lo;
  const double inv_range = layers.log_range > 0.0 ? 1.0 / layers.log_range : 0.0;
  for (double& v : layers.log_luminance.values()) {
    v = std::clamp((v - lo) * inv_range, 0.0, 1.0);
  }

  const SmoothingParams& sp = params.smoothing;
  if (sp.mode == SmoothingMode::kWeighted) {
    const WeightField weights = BuildWeightField(layers.log_luminance, sp.interval);
    layers.base = SmoothPlane(layers.log_luminance, sp, &weights).u;
  } else {
    layers.base = SmoothPlane(layers.log_luminance, sp).u;
  }

  layers.detail = layers.log_luminance;
  layers.compressed = layers.base;
  layers.luminance = ImagePlane(w, h);
  const auto base_values = layers.base.values();
  const double peak = *std::max_element(base_values.begin(), base_values.end());
  for (size_t i = 0; i < layers.base.size(); ++i) {
    layers.detail[i] -= layers.base[i];
    layers.compressed[i] =
        params.compression * (layers.base[i] - peak) + peak;
    const double log_out =
        lo + (layers.compressed[i] + layers.detail[i]) * layers.log_range;
    layers.luminance[i] = std::max(0.0, std::pow(10.0, log_out) - params.log_floor);
  }
  return layers;
}

MultiChannelImage Tonemap(const MultiChannelImage& hdr,
                          const TonemapParams& params) {
  if (hdr.range() != RangeTag::kHdr) {
    throw ParameterError("tone mapping requires an HDR-tagged image");
  }
  for (const ImagePlane& c : hdr.channels()) {
    for (double v : c.values()) {
      if (v < 0.0) {
        throw ParameterError("tone mapping input has negative value " +
                             std::to_string(v));
      }
    }
  }
  const ImagePlane in_lum = Luminance(hdr);
  const TonemapLayers layers = DecomposeLuminance(in_lum, params);
  ImagePlane out_lum = layers.luminance;
  if (params.normalize) {
    const auto v = out_lum.values();
    const double peak = *std::max_element(v.begin(), v.end());
    if (peak > 0.0) {
      for (double& x : out_lum.values()) x /= peak;
    }
  }

  std::vector<ImagePlane> out;
  out.reserve(hdr.num_channels());
  for (const ImagePlane& c : hdr.channels()) {
    ImagePlane plane(hdr.width(), hdr.height());
    for (size_t i = 0; i < plane.size(); ++i) {
      const double ratio =
          hdr.num_channels() == 1 ? 1.0 : (in_lum[i] > 0.0 ? c[i] / in_lum[i] : 0.0);
      plane[i] = std::clamp(ratio * out_lum[i], 0.0, 1.0);
    }
    out.push_back(std::move(plane));
  }
  return MultiChannelImage(std::move(out), RangeTag::kUnit);
}

}  // namespace ilsmooth
