// Copyright 2026 The StereoBit Authors. All Rights Reserved.
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

#ifndef STEREOBIT_IMAGE_HPP
#define STEREOBIT_IMAGE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "stereobit/common.hpp"

namespace stereobit {

/// 2-D grayscale raster, row-major, intensities as reals in [0, 255].
struct ImageBuf {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;

  ImageBuf() = default;
  ImageBuf(int w, int h, float fill = 0.0f)
      : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return pixels.size(); }

  void validate() const {
    if (width <= 0 || height <= 0)
      throw ValidationError("ImageBuf: width and height must be positive");
    if (pixels.size() != static_cast<size_t>(width) * height)
      throw ValidationError("ImageBuf: pixel count does not match dimensions");
    for (float v : pixels) {
      if (!std::isfinite(v) || v < 0.0f || v > 255.0f)
        throw ValidationError("ImageBuf: pixel outside [0, 255]");
    }
  }
};

/// Dense H x W x C tensor, row-major with channels innermost.
///
/// `margin` records how far this map is inset from the image it was derived
/// from: index (x, y) corresponds to image pixel (x + margin, y + margin).
template <typename T>
struct Tensor3 {
  int width = 0;
  int height = 0;
  int channels = 0;
  int margin = 0;
  std::vector<T> values;

  Tensor3() = default;
  Tensor3(int w, int h, int c, int m = 0)
      : width(w), height(h), channels(c), margin(m),
        values(static_cast<size_t>(w) * h * c, T{}) {}

  T& at(int x, int y, int c) {
    return values[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  T at(int x, int y, int c) const {
    return values[(static_cast<size_t>(y) * width + x) * channels + c];
  }
};

using FeatureMap = Tensor3<float>;
/// Integer rasters of the quantized path: inputs in [0, 255], int8
/// activations and 32-bit accumulators all share this representation.
using IntMap = Tensor3<int32_t>;

/// Per-pixel fixed-width binary signature packed into one 64-bit word.
struct DescriptorMap {
  int width = 0;
  int height = 0;
  int bits_per_descriptor = 0;
  /// Border width (in source-image pixels) where no descriptor exists;
  /// index (x, y) maps to image pixel (x + margin, y + margin).
  int margin = 0;
  std::vector<uint64_t> words;

  DescriptorMap() = default;
  DescriptorMap(int w, int h, int bits, int m)
      : width(w), height(h), bits_per_descriptor(bits), margin(m),
        words(static_cast<size_t>(w) * h, 0) {}

  uint64_t& at(int x, int y) { return words[static_cast<size_t>(y) * width + x]; }
  uint64_t at(int x, int y) const { return words[static_cast<size_t>(y) * width + x]; }

  void validate() const {
    if (width <= 0 || height <= 0)
      throw ValidationError("DescriptorMap: dimensions must be positive");
    if (bits_per_descriptor < 1 || bits_per_descriptor > 64)
      throw CapacityError("DescriptorMap: bits_per_descriptor must be in [1, 64]");
    if (words.size() != static_cast<size_t>(width) * height)
      throw ValidationError("DescriptorMap: word count does not match dimensions");
    if (bits_per_descriptor < 64) {
      const uint64_t mask = ~((uint64_t{1} << bits_per_descriptor) - 1);
      for (uint64_t w : words)
        if (w & mask) throw ValidationError("DescriptorMap: bits set above bits_per_descriptor");
    }
  }
};

/// Per-pixel real disparity; +infinity marks pixels with no estimate.
struct DisparityMap {
  static constexpr float kInvalid = std::numeric_limits<float>::infinity();

  int width = 0;
  int height = 0;
  std::vector<float> values;

  DisparityMap() = default;
  DisparityMap(int w, int h)
      : width(w), height(h), values(static_cast<size_t>(w) * h, kInvalid) {}

  float& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
  bool valid(int x, int y) const { return std::isfinite(at(x, y)); }
};

}  // namespace stereobit

#endif  // STEREOBIT_IMAGE_HPP
