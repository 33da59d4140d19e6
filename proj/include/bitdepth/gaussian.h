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

#ifndef BITDEPTH_GAUSSIAN_H_
#define BITDEPTH_GAUSSIAN_H_

#include <vector>

#include "bitdepth/frame.h"

namespace bitdepth {

// Normalized 2-D Gaussian reconstruction kernel of size N = 2*ceil(2*sigma)+1.
// The 2-D kernel is the outer product of the stored 1-D taps.
class GaussianKernel {
 public:
  // Below this bandwidth the kernel collapses to a single unit tap.
  static constexpr double kDeltaSigma = 0.05;

  // Throws Error(kInvalidArgument) for sigma <= 0 or non-finite sigma.
  explicit GaussianKernel(double sigma);

  double sigma() const { return sigma_; }
  int size() const { return static_cast<int>(taps_.size()); }
  const std::vector<double>& taps() const { return taps_; }
  // Row-major size() x size() weights.
  std::vector<double> Weights2D() const;

  static int SizeFor(double sigma);

 private:
  double sigma_;
  std::vector<double> taps_;
};

// Linear up-scale to `target`, then Gaussian filtering of every channel with
// symmetric boundary padding, rounding, and clamping to [0, M_target].
// Throws Error(kPrecondition) unless target > frame depth.
PlanarFrame GaussianUpsample(const PlanarFrame& frame, BitDepth target,
                             double sigma);

VideoSequence GaussianUpsample(const VideoSequence& seq, BitDepth target,
                               double sigma);

// Per-frame sigmas, one per frame.
VideoSequence GaussianUpsample(const VideoSequence& seq, BitDepth target,
                               const std::vector<double>& sigmas);

}  // namespace bitdepth

#endif  // BITDEPTH_GAUSSIAN_H_
