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

#include "bitdepth/diffusion.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "bitdepth/error.h"
#include "bitdepth/kernels.h"

namespace bitdepth {

DiffusionMatrix::DiffusionMatrix(std::string name,
                                 std::vector<std::vector<int>> numerators,
                                 int denominator, int anchor_row,
                                 int anchor_col)
    : name_(std::move(name)),
      numerators_(std::move(numerators)),
      denominator_(denominator),
      anchor_row_(anchor_row),
      anchor_col_(anchor_col) {
  if (numerators_.empty() || denominator_ <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "empty diffusion matrix");
  }
  const size_t cols = numerators_.front().size();
  if (anchor_row_ < 0 || anchor_row_ >= static_cast<int>(numerators_.size()) ||
      anchor_col_ < 0 || anchor_col_ >= static_cast<int>(cols)) {
    throw Error(ErrorKind::kInvalidArgument, "anchor outside matrix");
  }
  for (int r = 0; r < static_cast<int>(numerators_.size()); ++r) {
    if (numerators_[r].size() != cols) {
      throw Error(ErrorKind::kInvalidArgument, "ragged diffusion matrix");
    }
    for (int c = 0; c < static_cast<int>(cols); ++c) {
      const int v = numerators_[r][c];
      if (v < 0) {
        throw Error(ErrorKind::kInvalidArgument, "negative diffusion weight");
      }
      if (v == 0) continue;
      const bool visited =
          r < anchor_row_ || (r == anchor_row_ && c <= anchor_col_);
      if (visited) {
        throw Error(ErrorKind::kInvalidArgument,
                    "diffusion weight on an already visited pixel");
      }
      taps_.push_back({r - anchor_row_, c - anchor_col_, v});
    }
  }
  if (NumeratorSum() != denominator_) {
    throw Error(ErrorKind::kInvalidArgument,
                "diffusion weights must sum to 1");
  }
}

int DiffusionMatrix::NumeratorSum() const {
  int sum = 0;
  for (const auto& row : numerators_) {
    sum = std::accumulate(row.begin(), row.end(), sum);
  }
  return sum;
}

DiffusionMatrix BuiltinMatrix(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "sierra") {
    //        X   5   3
    //  2  4  5   4   2     (/32)
    //     2  3   2
    return DiffusionMatrix("sierra",
                           {{0, 0, 0, 5, 3}, {2, 4, 5, 4, 2}, {0, 2, 3, 2, 0}},
                           32, 0, 2);
  }
  if (key == "floyd_steinberg") {
    return DiffusionMatrix("floyd_steinberg", {{0, 0, 7}, {3, 5, 1}}, 16, 0,
                           1);
  }
  if (key == "jarvis") {
    return DiffusionMatrix("jarvis",
                           {{0, 0, 0, 7, 5}, {3, 5, 7, 5, 3}, {1, 3, 5, 3, 1}},
                           48, 0, 2);
  }
  if (key == "sierra_lite") {
    return DiffusionMatrix("sierra_lite", {{0, 0, 2}, {1, 1, 0}}, 4, 0, 1);
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown diffusion matrix '" + std::string(name) + "'");
}

std::vector<std::string> BuiltinMatrixNames() {
  return {"sierra", "floyd_steinberg", "jarvis", "sierra_lite"};
}

namespace {

// Diffuses one plane in raster order. Strictly sequential.
Plane DiffusePlane(std::span<const uint16_t> in, int width, int height,
                   uint32_t from_max, uint32_t to_max,
                   const DiffusionMatrix& matrix) {
  struct WeightedTap {
    int dy;
    int dx;
    double weight;
  };
  std::vector<WeightedTap> taps;
  for (const auto& t : matrix.taps()) {
    taps.push_back({t.dy, t.dx,
                    static_cast<double>(t.numerator) / matrix.denominator()});
  }

  std::vector<double> work(in.begin(), in.end());
  Plane out(in.size());
  const double down = static_cast<double>(to_max) / from_max;
  const double hi = static_cast<double>(to_max);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const size_t i = static_cast<size_t>(y) * width + x;
      const double w = work[i];
      const double q = std::clamp(RoundHalfAway(w * down), 0.0, hi);
      const uint16_t qi = static_cast<uint16_t>(q);
      out[i] = qi;
      const double err =
          w - static_cast<double>(kernels::RescaleSample(qi, to_max, from_max));
      if (err == 0.0) continue;
      for (const WeightedTap& t : taps) {
        const int xx = x + t.dx;
        const int yy = y + t.dy;
        if (xx < 0 || xx >= width || yy >= height) continue;
        work[static_cast<size_t>(yy) * width + xx] += t.weight * err;
      }
    }
  }
  return out;
}

void CheckTarget(BitDepth source, BitDepth target) {
  if (target >= source) {
    throw Error(ErrorKind::kPrecondition,
                "error diffusion target depth " +
                    std::to_string(target.bits()) + " must be below source " +
                    std::to_string(source.bits()));
  }
}

}  // namespace

PlanarFrame ErrorDiffuseDownsample(const PlanarFrame& frame, BitDepth target,
                                   const DiffusionMatrix& matrix) {
  CheckTarget(frame.depth(), target);
  const int channels = frame.channels();
  std::vector<Plane> planes(channels);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < channels; ++c) {
    planes[c] = DiffusePlane(frame.plane(c), frame.width(), frame.height(),
                             frame.depth().max_value(), target.max_value(),
                             matrix);
  }
  return PlanarFrame(frame.width(), frame.height(), target,
                     frame.channel_order(), std::move(planes));
}

VideoSequence ErrorDiffuseDownsample(const VideoSequence& seq,
                                     BitDepth target,
                                     const DiffusionMatrix& matrix) {
  // Exceptions must not escape the parallel region below.
  CheckTarget(seq.depth(), target);
  const int n = static_cast<int>(seq.size());
  std::vector<std::optional<PlanarFrame>> slots(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < n; ++t) {
    slots[t].emplace(ErrorDiffuseDownsample(seq.frame(t), target, matrix));
  }
  std::vector<PlanarFrame> frames;
  frames.reserve(n);
  for (auto& s : slots) frames.push_back(std::move(*s));
  return VideoSequence(std::move(frames), seq.fps(), seq.name());
}

}  // namespace bitdepth
