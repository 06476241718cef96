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

#include "ilsmooth/image.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace ilsmooth {

namespace {

constexpr double kUnitTolerance = 1e-9;

void CheckDimensions(int width, int height) {
  if (width < 0 || height < 0) {
    throw DimensionError("image dimensions must be nonnegative, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

ImagePlane::ImagePlane(int width, int height) : ImagePlane(width, height, 0.0) {}

ImagePlane::ImagePlane(int width, int height, double fill)
    : width_(width), height_(height) {
  CheckDimensions(width, height);
  if (!std::isfinite(fill)) throw ParameterError("fill value must be finite");
  data_.assign(static_cast<size_t>(width) * static_cast<size_t>(height), fill);
}

ImagePlane::ImagePlane(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  CheckDimensions(width, height);
  if (data_.size() != static_cast<size_t>(width) * static_cast<size_t>(height)) {
    throw DimensionError("plane data has " + std::to_string(data_.size()) +
                         " values, expected " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw ParameterError("plane contains a non-finite value");
  }
}

MultiChannelImage::MultiChannelImage(std::vector<ImagePlane> channels,
                                     RangeTag range)
    : channels_(std::move(channels)), range_(range) {
  if (channels_.size() != 1 && channels_.size() != 3) {
    throw DimensionError("unsupported channel count " +
                         std::to_string(channels_.size()) + " (expected 1 or 3)");
  }
  for (const ImagePlane& c : channels_) {
    if (!c.SameSize(channels_[0])) {
      throw DimensionError("channels differ in size");
    }
  }
  if (range_ == RangeTag::kUnit) {
    for (const ImagePlane& c : channels_) {
      for (double v : c.values()) {
        if (v < -kUnitTolerance || v > 1.0 + kUnitTolerance) {
          throw ParameterError("unit-range image has value " + std::to_string(v) +
                               " outside [0, 1]");
        }
      }
    }
  }
}

void RequireSmoothable(const ImagePlane& p) {
  if (p.width() < 2 || p.height() < 2) {
    throw DimensionError("image must be at least 2x2, got " +
                         std::to_string(p.width()) + "x" +
                         std::to_string(p.height()));
  }
}

GradientPair ForwardGradients(const ImagePlane& p) {
  RequireSmoothable(p);
  const int w = p.width();
  const int h = p.height();
  GradientPair g{ImagePlane(w, h), ImagePlane(w, h)};
  for (int y = 0; y < h; ++y) {
    const auto row = p.Row(y);
    const auto below = p.Row(y + 1 == h ? 0 : y + 1);
    auto gx = g.gx.Row(y);
    auto gy = g.gy.Row(y);
    for (int x = 0; x + 1 < w; ++x) gx[x] = row[x + 1] - row[x];
    gx[w - 1] = row[0] - row[w - 1];
    for (int x = 0; x < w; ++x) gy[x] = below[x] - row[x];
  }
  return g;
}

ImagePlane Luminance(const MultiChannelImage& img) {
  if (img.num_channels() == 1) return img.channel(0);
  if (img.num_channels() != 3) {
    throw DimensionError("luminance needs 1 or 3 channels, got " +
                         std::to_string(img.num_channels()));
  }
  const ImagePlane& r = img.channel(0);
  const ImagePlane& g = img.channel(1);
  const ImagePlane& b = img.channel(2);
  ImagePlane out(img.width(), img.height());
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
  }
  return out;
}

ImagePlane ClampUnit(const ImagePlane& p) {
  ImagePlane out = p;
  for (double& v : out.values()) v = std::clamp(v, 0.0, 1.0);
  return out;
}

MultiChannelImage ClampUnit(const MultiChannelImage& img) {
  std::vector<ImagePlane> channels;
  channels.reserve(img.num_channels());
  for (const ImagePlane& c : img.channels()) channels.push_back(ClampUnit(c));
  return MultiChannelImage(std::move(channels), RangeTag::kUnit);
}

}  // namespace ilsmooth
