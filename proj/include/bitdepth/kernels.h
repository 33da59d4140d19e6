// Copyright 2026 The BitDepth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BITDEPTH_KERNELS_H_
#define BITDEPTH_KERNELS_H_

// Data-parallel pixel kernels. Loops over rows are OpenMP-parallel when the
// library is built with OpenMP; results do not depend on the thread count.
// Serial reference versions used for testing live in reference_kernels.h.

#include <cstdint>
#include <span>
#include <vector>

#include "bitdepth/frame.h"

namespace bitdepth {

// Real-valued single-channel image, row-major.
struct ImageF {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  ImageF() = default;
  ImageF(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const {
    return data[static_cast<size_t>(y) * width + x];
  }
  size_t size() const { return data.size(); }
};

namespace kernels {

// Maps an out-of-range index into [0, n) by half-sample symmetric
// reflection (-1 -> 0, n -> n-1), repeating as often as needed.
inline int MirrorIndex(int i, int n) {
  const int period = 2 * n;
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

// round(v * to_max / from_max), ties away from zero, computed exactly in
// integer arithmetic.
inline uint16_t RescaleSample(uint32_t v, uint32_t from_max, uint32_t to_max) {
  const uint64_t num = 2 * static_cast<uint64_t>(v) * to_max + from_max;
  return static_cast<uint16_t>(num / (2 * static_cast<uint64_t>(from_max)));
}

// Lookup table of RescaleSample over 0..from_max.
std::vector<uint16_t> RescaleTable(uint32_t from_max, uint32_t to_max);

Plane RescalePlane(std::span<const uint16_t> in, uint32_t from_max,
                   uint32_t to_max);

ImageF ToImage(std::span<const uint16_t> plane, int width, int height);

// Rounds half away from zero and clamps to [0, max_value].
Plane QuantizeImage(const ImageF& img, uint32_t max_value);

// "Same"-size separable convolution with a symmetric 1-D kernel of odd
// length, symmetric boundary padding.
ImageF ConvolveSeparable(const ImageF& img, std::span<const double> taps);

// "Valid"-region separable correlation: output is
// (width - n + 1) x (height - n + 1) for an n-tap kernel.
ImageF FilterValid(const ImageF& img, std::span<const double> taps);

// Sum of squared differences.
double SquaredErrorSum(std::span<const uint16_t> a,
                       std::span<const uint16_t> b);

// Sum of squared differences between `ref` and the rounded, clamped
// version of `img` (the output QuantizeImage would produce).
double QuantizedSquaredErrorSum(const ImageF& img, uint32_t max_value,
                                std::span<const uint16_t> ref);

// Element-wise product a*b.
ImageF Multiply(const ImageF& a, const ImageF& b);

}  // namespace kernels
}  // namespace bitdepth

#endif  // BITDEPTH_KERNELS_H_
