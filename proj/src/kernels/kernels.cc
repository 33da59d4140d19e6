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

#include "bitdepth/kernels.h"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "bitdepth/error.h"

namespace bitdepth::kernels {

std::vector<uint16_t> RescaleTable(uint32_t from_max, uint32_t to_max) {
  std::vector<uint16_t> table(from_max + 1);
  for (uint32_t v = 0; v <= from_max; ++v) {
    table[v] = RescaleSample(v, from_max, to_max);
  }
  return table;
}

Plane RescalePlane(std::span<const uint16_t> in, uint32_t from_max,
                   uint32_t to_max) {
  const std::vector<uint16_t> table = RescaleTable(from_max, to_max);
  Plane out(in.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = table[in[i]];
  }
  return out;
}

ImageF ToImage(std::span<const uint16_t> plane, int width, int height) {
  ImageF img(width, height);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(img.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    img.data[i] = plane[i];
  }
  return img;
}

Plane QuantizeImage(const ImageF& img, uint32_t max_value) {
  Plane out(img.size());
  const double hi = static_cast<double>(max_value);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(img.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = static_cast<uint16_t>(
        std::clamp(RoundHalfAway(img.data[i]), 0.0, hi));
  }
  return out;
}

ImageF ConvolveSeparable(const ImageF& img, std::span<const double> taps) {
  const int n = static_cast<int>(taps.size());
  if (n % 2 != 1) {
    throw Error(ErrorKind::kInvalidArgument, "kernel length must be odd");
  }
  const int r = n / 2;
  const int w = img.width;
  const int h = img.height;

  ImageF horiz(w, h);
#pragma omp parallel
  {
    std::vector<double> padded(static_cast<size_t>(w) + 2 * r);
#pragma omp for schedule(static)
    for (int y = 0; y < h; ++y) {
      const double* row = &img.data[static_cast<size_t>(y) * w];
      for (int i = 0; i < w + 2 * r; ++i) {
        padded[i] = row[MirrorIndex(i - r, w)];
      }
      double* out = &horiz.data[static_cast<size_t>(y) * w];
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += taps[k] * padded[x + k];
        out[x] = acc;
      }
    }
  }

  ImageF result(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    double* out = &result.data[static_cast<size_t>(y) * w];
    for (int k = 0; k < n; ++k) {
      const double* src =
          &horiz.data[static_cast<size_t>(MirrorIndex(y + k - r, h)) * w];
      const double t = taps[k];
      for (int x = 0; x < w; ++x) out[x] += t * src[x];
    }
  }
  return result;
}

ImageF FilterValid(const ImageF& img, std::span<const double> taps) {
  const int n = static_cast<int>(taps.size());
  const int ow = img.width - n + 1;
  const int oh = img.height - n + 1;
  if (n <= 0 || ow <= 0 || oh <= 0) {
    throw Error(ErrorKind::kPrecondition, "image smaller than filter window");
  }
  const int w = img.width;

  ImageF horiz(ow, img.height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < img.height; ++y) {
    const double* row = &img.data[static_cast<size_t>(y) * w];
    double* out = &horiz.data[static_cast<size_t>(y) * ow];
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += taps[k] * row[x + k];
      out[x] = acc;
    }
  }

  ImageF result(ow, oh);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < oh; ++y) {
    double* out = &result.data[static_cast<size_t>(y) * ow];
    for (int k = 0; k < n; ++k) {
      const double* src = &horiz.data[static_cast<size_t>(y + k) * ow];
      const double t = taps[k];
      for (int x = 0; x < ow; ++x) out[x] += t * src[x];
    }
  }
  return result;
}

double SquaredErrorSum(std::span<const uint16_t> a,
                       std::span<const uint16_t> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kInvalidArgument, "plane size mismatch");
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
  double sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += d * d;
  }
  return sum;
}

double QuantizedSquaredErrorSum(const ImageF& img, uint32_t max_value,
                                std::span<const uint16_t> ref) {
  if (img.size() != ref.size()) {
    throw Error(ErrorKind::kInvalidArgument, "plane size mismatch");
  }
  const double hi = static_cast<double>(max_value);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ref.size());
  double sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double q = std::clamp(RoundHalfAway(img.data[i]), 0.0, hi);
    const double d = q - static_cast<double>(ref[i]);
    sum += d * d;
  }
  return sum;
}

ImageF Multiply(const ImageF& a, const ImageF& b) {
  ImageF out(a.width, a.height);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out.data[i] = a.data[i] * b.data[i];
  }
  return out;
}

}  // namespace bitdepth::kernels
