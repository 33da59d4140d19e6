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

#ifndef BITDEPTH_ADAPTATION_H_
#define BITDEPTH_ADAPTATION_H_

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bitdepth/diffusion.h"
#include "bitdepth/frame.h"
#include "bitdepth/gaussian.h"
#include "bitdepth/rescale.h"

namespace bitdepth {

enum class SigmaGranularity { kPerSequence, kPerFrame };

struct SigmaSearchConfig {
  double sigma_lo = GaussianKernel::kDeltaSigma;
  double sigma_hi = 4.0;
  int grid_cells = 32;
  double tolerance = 1e-3;
  SigmaGranularity granularity = SigmaGranularity::kPerSequence;

  // Throws Error(kInvalidArgument) when the range or grid is unusable.
  void Validate() const;
};

// One sigma per sequence or one per frame, with the MSE each achieves.
struct SigmaEstimate {
  std::vector<double> sigma;
  std::vector<double> mse;

  double ForFrame(size_t i) const {
    return sigma.size() == 1 ? sigma.front() : sigma.at(i);
  }
};

struct ScalarMinimum {
  double x;
  double value;
};

// Minimizes `f` over [lo, hi]: a uniform grid of `cells` intervals, then
// golden-section refinement inside the neighbourhood of the best grid
// point until the bracket is narrower than `tolerance`. Ties go to the
// smaller x. The result is never worse than any point evaluated.
ScalarMinimum GridThenGoldenMinimize(const std::function<double(double)>& f,
                                     double lo, double hi, int cells,
                                     double tolerance);

// Finds the sigma minimizing the MSE between GaussianUpsample(low) and
// `reference`. Throws Error(kInvalidArgument) on geometry, channel, frame
// count or depth mismatch (low must be shallower than reference).
SigmaEstimate OptimizeSigma(const VideoSequence& low,
                            const VideoSequence& reference,
                            const SigmaSearchConfig& config = {});

struct LinearDown {};
struct ErrorDiffusionDown {
  DiffusionMatrix matrix;
};
using DownMethod = std::variant<LinearDown, ErrorDiffusionDown>;

struct LinearUp {};
struct GaussianUp {
  // Unset: chosen by OptimizeSigma against the original sequence.
  std::optional<double> sigma;
  SigmaSearchConfig search;
};
using UpMethod = std::variant<LinearUp, GaussianUp>;

struct AdaptationMethod {
  DownMethod down;
  UpMethod up;

  // The three configurations studied: linear/linear, Sierra error diffusion
  // with linear up-sampling, and Sierra with the adaptive Gaussian filter.
  static AdaptationMethod Linear();
  static AdaptationMethod ErrorDiffusion();
  static AdaptationMethod AdaptiveGaussian(
      std::optional<double> sigma = std::nullopt);

  std::string Label() const;
};

struct RoundTripResult {
  VideoSequence down;
  VideoSequence reconstructed;
  std::vector<double> frame_mse;
  // Set when the up-sampler is Gaussian.
  std::optional<SigmaEstimate> sigma;
};

// Down-samples `seq` to `target` and back to the source depth, reporting
// per-frame MSE (pooled over channels) against the input.
// Throws Error(kPrecondition) unless target < source depth.
RoundTripResult RoundTrip(const VideoSequence& seq, BitDepth target,
                          const AdaptationMethod& method);

// Mean squared error pooled over all channels of two same-layout frames.
double FrameMse(const PlanarFrame& a, const PlanarFrame& b);

}  // namespace bitdepth

#endif  // BITDEPTH_ADAPTATION_H_
