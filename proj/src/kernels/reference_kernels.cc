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

#include "bitdepth/reference_kernels.h"

#include <cmath>
#include <vector>

#include "bitdepth/error.h"

namespace bitdepth::reference {

Plane RescalePlane(std::span<const uint16_t> in, uint32_t from_max,
                   uint32_t to_max) {
  Plane out(in.size());
  const double scale =
      static_cast<double>(to_max) / static_cast<double>(from_max);
  for (size_t i = 0; i < in.size(); ++i) {
    out[i] = static_cast<uint16_t>(std::round(in[i] * scale));
  }
  return out;
}

ImageF Convolve2D(const ImageF& img, std::span<const double> kernel, int n) {
  const int r = n / 2;
  ImageF out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        const int yy = kernels::MirrorIndex(y + j - r, img.height);
        for (int i = 0; i < n; ++i) {
          const int xx = kernels::MirrorIndex(x + i - r, img.width);
          acc += kernel[static_cast<size_t>(j) * n + i] * img.at(xx, yy);
        }
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

ImageF FilterValid2D(const ImageF& img, std::span<const double> kernel,
                     int n) {
  const int ow = img.width - n + 1;
  const int oh = img.height - n + 1;
  if (ow <= 0 || oh <= 0) {
    throw Error(ErrorKind::kPrecondition, "image smaller than filter window");
  }
  ImageF out(ow, oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          acc += kernel[static_cast<size_t>(j) * n + i] * img.at(x + i, y + j);
        }
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

double SquaredErrorSum(std::span<const uint16_t> a,
                       std::span<const uint16_t> b) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - b[i];
    sum += d * d;
  }
  return sum;
}

double SsimDirect(const ImageF& x, const ImageF& y, double dynamic_range) {
  constexpr int kWin = 11;
  constexpr double kSigma = 1.5;
  double weights[kWin][kWin];
  double total = 0.0;
  for (int j = 0; j < kWin; ++j) {
    for (int i = 0; i < kWin; ++i) {
      const double dx = i - kWin / 2;
      const double dy = j - kWin / 2;
      weights[j][i] = std::exp(-(dx * dx + dy * dy) / (2 * kSigma * kSigma));
      total += weights[j][i];
    }
  }
  for (auto& row : weights) {
    for (double& w : row) w /= total;
  }
  const double c1 = std::pow(0.01 * dynamic_range, 2);
  const double c2 = std::pow(0.03 * dynamic_range, 2);

  double sum = 0.0;
  int count = 0;
  for (int oy = 0; oy + kWin <= x.height; ++oy) {
    for (int ox = 0; ox + kWin <= x.width; ++ox) {
      double mx = 0, my = 0;
      for (int j = 0; j < kWin; ++j) {
        for (int i = 0; i < kWin; ++i) {
          mx += weights[j][i] * x.at(ox + i, oy + j);
          my += weights[j][i] * y.at(ox + i, oy + j);
        }
      }
      double vx = 0, vy = 0, cxy = 0;
      for (int j = 0; j < kWin; ++j) {
        for (int i = 0; i < kWin; ++i) {
          const double a = x.at(ox + i, oy + j) - mx;
          const double b = y.at(ox + i, oy + j) - my;
          vx += weights[j][i] * a * a;
          vy += weights[j][i] * b * b;
          cxy += weights[j][i] * a * b;
        }
      }
      sum += ((2 * mx * my + c1) * (2 * cxy + c2)) /
             ((mx * mx + my * my + c1) * (vx + vy + c2));
      ++count;
    }
  }
  if (count == 0) {
    throw Error(ErrorKind::kPrecondition, "image smaller than SSIM window");
  }
  return sum / count;
}

}  // namespace bitdepth::reference
