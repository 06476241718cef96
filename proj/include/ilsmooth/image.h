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

#ifndef ILSMOOTH_IMAGE_H_
#define ILSMOOTH_IMAGE_H_

// Planar image model shared by every module.
//
// All finite differences and solves in this library use a periodic boundary:
// the right neighbor of the last column is the first column, and likewise for
// rows. This matches the FFT-based solver exactly. Images with strong
// left/right or top/bottom intensity mismatch can show wrap artifacts near the
// border; padding by a few replicated pixels and cropping afterwards would
// mitigate this but is not implemented.

#include <cstddef>
#include <span>
#include <vector>

#include "ilsmooth/errors.h"

namespace ilsmooth {

// Row-major 2D array of real intensities.
class ImagePlane {
 public:
  ImagePlane() = default;
  // Zero-filled plane.
  ImagePlane(int width, int height);
  ImagePlane(int width, int height, double fill);
  // Throws DimensionError if data.size() != width * height and
  // ParameterError if any value is not finite.
  ImagePlane(int width, int height, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& at(int x, int y) { return data_[Index(x, y)]; }
  double at(int x, int y) const { return data_[Index(x, y)]; }
  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  std::span<double> Row(int y) {
    return {data_.data() + Index(0, y), static_cast<size_t>(width_)};
  }
  std::span<const double> Row(int y) const {
    return {data_.data() + Index(0, y), static_cast<size_t>(width_)};
  }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  bool SameSize(const ImagePlane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * static_cast<size_t>(width_) +
           static_cast<size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

enum class RangeTag {
  kUnit,  // every value in [0, 1]
  kHdr,   // finite, nominally nonnegative and unbounded
};

// One (gray) or three (RGB) equally sized planes.
class MultiChannelImage {
 public:
  MultiChannelImage() = default;
  // Validates channel count, matching sizes and, for kUnit, the [0, 1] range
  // within 1e-9.
  MultiChannelImage(std::vector<ImagePlane> channels, RangeTag range);

  int width() const { return channels_.empty() ? 0 : channels_[0].width(); }
  int height() const { return channels_.empty() ? 0 : channels_[0].height(); }
  int num_channels() const { return static_cast<int>(channels_.size()); }
  RangeTag range() const { return range_; }

  const ImagePlane& channel(int c) const { return channels_[c]; }
  const std::vector<ImagePlane>& channels() const { return channels_; }

  friend bool operator==(const MultiChannelImage&,
                         const MultiChannelImage&) = default;

 private:
  std::vector<ImagePlane> channels_;
  RangeTag range_ = RangeTag::kUnit;
};

// Forward differences [1, -1] along x and y.
struct GradientPair {
  ImagePlane gx;
  ImagePlane gy;
};

// Throws DimensionError unless width >= 2 and height >= 2.
void RequireSmoothable(const ImagePlane& p);

// gx(x, y) = p(x + 1, y) - p(x, y) and gy(x, y) = p(x, y + 1) - p(x, y) with
// periodic neighbors.
GradientPair ForwardGradients(const ImagePlane& p);

// Copy for gray images, Rec.601 luma (0.299 R + 0.587 G + 0.114 B) for RGB.
ImagePlane Luminance(const MultiChannelImage& img);

// Clips every value to [0, 1] and tags the result kUnit.
MultiChannelImage ClampUnit(const MultiChannelImage& img);

// Element-wise clip of a single plane to [0, 1].
ImagePlane ClampUnit(const ImagePlane& p);

}  // namespace ilsmooth

#endif  // ILSMOOTH_IMAGE_H_
