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

#ifndef ILSMOOTH_IMAGE_IO_H_
#define ILSMOOTH_IMAGE_IO_H_

#include <string>
#include <vector>

#include "ilsmooth/image.h"

namespace ilsmooth {

// Reads an 8-bit PNG (gray or RGB; any alpha channel is dropped and noted in
// `warnings`) as a unit-range image, or a PFM (either endianness) as an HDR
// image. The format is detected from the file contents. Throws IoError.
MultiChannelImage LoadImage(const std::string& path,
                            std::vector<std::string>* warnings = nullptr);

// Writes by extension: ".png" quantizes unit-range values to 8 bits, rounding
// half away from zero; ".pfm" writes little-endian floats. Throws IoError for
// unwritable paths or unknown extensions and ParameterError for values
// outside [0, 1] when writing PNG.
void SaveImage(const MultiChannelImage& img, const std::string& path);

// Writes a single plane as an 8-bit grayscale PNG.
void SavePlanePng(const ImagePlane& plane, const std::string& path);

// value * 255 rounded half away from zero, for values in [0, 1].
unsigned char QuantizeUnit(double value);

}  // namespace ilsmooth

#endif  // ILSMOOTH_IMAGE_IO_H_
