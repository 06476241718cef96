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

#ifndef ILSMOOTH_APPS_H_
#define ILSMOOTH_APPS_H_

#include "ilsmooth/ils.h"
#include "ilsmooth/image.h"

namespace ilsmooth {

struct EnhanceParams {
  double boost = 3.0;  // detail multiplier, >= 0
  SmoothingParams smoothing;
};

// out = clamp(base + boost * (img - base)) with base = Smooth(img).
MultiChannelImage Enhance(const MultiChannelImage& img,
                          const EnhanceParams& params);

struct TonemapParams {
  double compression = 0.6;  // base-layer contrast scale in (0, 1]
  SmoothingParams smoothing;
  double log_floor = 1e-6;   // added before log10, > 0
  // Scale the output luminance so its maximum is 1 before rebuilding colors.
  bool normalize = false;
};

// Intermediate planes of the log-luminance base/detail decomposition. All but
// `luminance` live in the [0, 1]-rescaled log10 domain.
struct TonemapLayers {
  ImagePlane log_luminance;  // (log10(L + floor) - log_min) / log_range
  ImagePlane base;
  ImagePlane detail;      // log_luminance - base
  ImagePlane compressed;  // compression * (base - max base) + max base
  ImagePlane luminance;   // 10^(inverse rescale(compressed + detail)) - floor
  double log_min = 0.0;
  double log_range = 0.0;  // 0 for constant inputs
};

// Throws ParameterError for negative luminance or invalid params.
TonemapLayers DecomposeLuminance(const ImagePlane& luminance,
                                 const TonemapParams& params);

// Tone maps an HDR image: compresses the base layer of its log luminance,
// keeps the detail layer, then rebuilds colors by channel/luminance ratios
// and clamps to [0, 1].
MultiChannelImage Tonemap(const MultiChannelImage& hdr,
                          const TonemapParams& params);

}  // namespace ilsmooth

#endif  // ILSMOOTH_APPS_H_
