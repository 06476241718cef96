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

#include "ilsmooth/image_io.h"

#include <png.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace ilsmooth {

namespace {

constexpr double kUnitTolerance = 1e-9;

std::string Lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool HasExtension(const std::string& path, const std::string& ext) {
  const std::string lower = Lowercase(path);
  return lower.size() >= ext.size() &&
         lower.compare(lower.size() - ext.size(), ext.size(), ext) == 0;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("error writing " + path);
}

MultiChannelImage DecodePng(const std::string& bytes, const std::string& path,
                            std::vector<std::string>* warnings) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw IoError("corrupt PNG " + path + ": " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  const bool alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  if (alpha && warnings != nullptr) {
    warnings->push_back("alpha channel of " + path + " ignored");
  }
  // Request the alpha channel explicitly so libpng does not composite it.
  image.format = color ? (alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB)
                       : (alpha ? PNG_FORMAT_GA : PNG_FORMAT_GRAY);
  const int stored = PNG_IMAGE_SAMPLE_CHANNELS(image.format);
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw IoError("corrupt PNG " + path + ": " + msg);
  }
  const int w = static_cast<int>(image.width);
  const int h = static_cast<int>(image.height);
  const int channels = color ? 3 : 1;
  std::vector<std::vector<double>> planes(
      channels, std::vector<double>(static_cast<size_t>(w) * h));
  for (size_t i = 0; i < planes[0].size(); ++i) {
    for (int c = 0; c < channels; ++c) {
      planes[c][i] = buffer[i * stored + c] / 255.0;
    }
  }
  std::vector<ImagePlane> out;
  for (auto& p : planes) out.emplace_back(w, h, std::move(p));
  return MultiChannelImage(std::move(out), RangeTag::kUnit);
}

// PFM: "PF" (RGB) or "Pf" (gray), width, height, scale; negative scale means
// little-endian. Scanlines are stored bottom to top.
MultiChannelImage DecodePfm(const std::string& bytes, const std::string& path) {
  std::istringstream header(bytes);
  std::string magic;
  long long w = 0;
  long long h = 0;
  double scale = 0.0;
  header >> magic >> w >> h >> scale;
  if (!header || (magic != "PF" && magic != "Pf") || w <= 0 || h <= 0 ||
      scale == 0.0 || w > (1 << 20) || h > (1 << 20)) {
    throw IoError("corrupt PFM header in " + path);
  }
  // Exactly one whitespace byte separates the scale from the raster.
  const std::streamoff scale_end = header.tellg();
  if (scale_end < 0) throw IoError("truncated PFM header in " + path);
  const auto raster_start = static_cast<size_t>(scale_end) + 1;
  const int channels = magic == "PF" ? 3 : 1;
  const size_t count = static_cast<size_t>(w) * h * channels;
  if (bytes.size() < raster_start + count * 4) {
    throw IoError("truncated PFM raster in " + path);
  }
  const bool file_little = scale < 0.0;
  const bool host_little = std::endian::native == std::endian::little;
  std::vector<std::vector<double>> planes(
      channels, std::vector<double>(static_cast<size_t>(w) * h));
  const char* raster = bytes.data() + raster_start;
  for (long long row = 0; row < h; ++row) {
    const long long y = h - 1 - row;
    for (long long x = 0; x < w; ++x) {
      for (int c = 0; c < channels; ++c) {
        const size_t k = (static_cast<size_t>(row) * w + x) * channels + c;
        uint32_t bits;
        std::memcpy(&bits, raster + 4 * k, 4);
        if (file_little != host_little) bits = __builtin_bswap32(bits);
        const float v = std::bit_cast<float>(bits);
        if (!std::isfinite(v)) throw IoError("non-finite PFM value in " + path);
        planes[c][static_cast<size_t>(y) * w + x] = v;
      }
    }
  }
  std::vector<ImagePlane> out;
  for (auto& p : planes) {
    out.emplace_back(static_cast<int>(w), static_cast<int>(h), std::move(p));
  }
  return MultiChannelImage(std::move(out), RangeTag::kHdr);
}

std::string EncodePfm(const MultiChannelImage& img) {
  const int w = img.width();
  const int h = img.height();
  const int channels = img.num_channels();
  std::string out = (channels == 3 ? "PF\n" : "Pf\n") + std::to_string(w) +
                    " " + std::to_string(h) + "\n-1.0\n";
  const size_t header = out.size();
  out.resize(header + static_cast<size_t>(w) * h * channels * 4);
  char* raster = out.data() + header;
  size_t k = 0;
  for (int row = 0; row < h; ++row) {
    const int y = h - 1 - row;
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < channels; ++c, ++k) {
        uint32_t bits = std::bit_cast<uint32_t>(
            static_cast<float>(img.channel(c).at(x, y)));
        if constexpr (std::endian::native != std::endian::little) {
          bits = __builtin_bswap32(bits);
        }
        std::memcpy(raster + 4 * k, &bits, 4);
      }
    }
  }
  return out;
}

void WritePng(const std::vector<const ImagePlane*>& planes, const std::string& path) {
  const int w = planes[0]->width();
  const int h = planes[0]->height();
  const int channels = static_cast<int>(planes.size());
  std::vector<png_byte> buffer(static_cast<size_t>(w) * h * channels);
  for (size_t i = 0; i < static_cast<size_t>(w) * h; ++i) {
    for (int c = 0; c < channels; ++c) {
      const double v = (*planes[c])[i];
      if (!(v >= -kUnitTolerance && v <= 1.0 + kUnitTolerance)) {
        throw ParameterError("PNG output needs values in [0, 1], got " +
                             std::to_string(v));
      }
      buffer[i * channels + c] = QuantizeUnit(v);
    }
  }
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(w);
  image.height = static_cast<png_uint_32>(h);
  image.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  // First call sizes the buffer, second call encodes.
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, buffer.data(), 0,
                                 nullptr)) {
    throw IoError("PNG encoding failed for " + path + ": " + image.message);
  }
  std::string bytes(size, '\0');
  if (!png_image_write_to_memory(&image, bytes.data(), &size, 0, buffer.data(),
                                 0, nullptr)) {
    throw IoError("PNG encoding failed for " + path + ": " + image.message);
  }
  bytes.resize(size);
  WriteFile(path, bytes);
}

}  // namespace

unsigned char QuantizeUnit(double value) {
  const double clipped = std::clamp(value, 0.0, 1.0);
  return static_cast<unsigned char>(std::lround(clipped * 255.0));
}

MultiChannelImage LoadImage(const std::string& path,
                            std::vector<std::string>* warnings) {
  const std::string bytes = ReadFile(path);
  static constexpr unsigned char kPngSignature[8] = {0x89, 'P',  'N',  'G',
                                                     '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0) {
    return DecodePng(bytes, path, warnings);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == 'F' || bytes[1] == 'f')) {
    return DecodePfm(bytes, path);
  }
  throw IoError("unsupported image format: " + path);
}

void SaveImage(const MultiChannelImage& img, const std::string& path) {
  if (HasExtension(path, ".png")) {
    std::vector<const ImagePlane*> planes;
    for (const ImagePlane& c : img.channels()) planes.push_back(&c);
    WritePng(planes, path);
  } else if (HasExtension(path, ".pfm")) {
    WriteFile(path, EncodePfm(img));
  } else {
    throw IoError("unsupported output format (use .png or .pfm): " + path);
  }
}

void SavePlanePng(const ImagePlane& plane, const std::string& path) {
  WritePng({&plane}, path);
}

}  // namespace ilsmooth
