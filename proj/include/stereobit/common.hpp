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

#ifndef STEREOBIT_COMMON_HPP
#define STEREOBIT_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace stereobit {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid arguments or violated type invariants. CLI maps these to exit 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Size/shape mismatches (image smaller than receptive field, dim mismatch).
class DimensionError : public ValidationError {
 public:
  explicit DimensionError(const std::string& msg) : ValidationError(msg) {}
};

/// Descriptor wider than the 64-bit word backing it.
class CapacityError : public ValidationError {
 public:
  explicit CapacityError(const std::string& msg) : ValidationError(msg) {}
};

/// Filesystem-level failures (missing file, unwritable path). Exit 3.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Structurally broken file contents; the message names the offending field.
class FormatError : public IoError {
 public:
  explicit FormatError(const std::string& msg) : IoError(msg) {}
};

/// round-half-away-from-zero, the rounding used everywhere in the library.
inline long long round_half_away(double v) { return std::llround(v); }

inline int8_t clamp_to_int8(long long v) {
  if (v < -128) return -128;
  if (v > 127) return 127;
  return static_cast<int8_t>(v);
}

}  // namespace stereobit

#endif  // STEREOBIT_COMMON_HPP
