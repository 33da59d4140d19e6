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

#include "bitdepth/gaussian.h"

#include <cmath>
#include <optional>
#include <utility>

#include "bitdepth/error.h"
#include "bitdepth/kernels.h"
#include "bitdepth/rescale.h"

namespace bitdepth {

int GaussianKernel::SizeFor(double sigma) {
  if (sigma < kDeltaSigma) return 1;
  return 2 * static_cast<int>(std::ceil(2.0 * sigma)) + 1;
}

GaussianKernel::GaussianKernel(double sigma) : sigma_(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::kInvalidArgument,
                "Gaussian sigma must be positive and finite");
  }
  const int n = SizeFor(sigma);
  const int r = n / 2;
  taps_.resize(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = i - r;
    taps_[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    sum += taps_[i];
  }
  for (double& t : taps_) t /= sum;
}

std::vector<double> GaussianKernel::Weights2D() const {
  const int n = size();
  std::vector<double> w(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(j) * n + i] = taps_[j] * taps_[i];
  }
  return w;
}

namespace {

void CheckUpTarget(BitDepth source, BitDepth target) {
  if (target <= source) {
    throw Error(ErrorKind::kPrecondition,
                "Gaussian up-sampling target depth " +
                    std::to_string(target.bits()) + " must exceed source " +
                    std::to_string(source.bits()));
  }
}

PlanarFrame UpsampleChecked(const PlanarFrame& frame, BitDepth target,
                            const GaussianKernel& kernel) {
  const PlanarFrame up = LinearRescale(frame, target);
  if (kernel.size() == 1) return up;
  std::vector<Plane> planes;
  planes.reserve(up.channels());
  for (int c = 0; c < up.channels(); ++c) {
    const ImageF img = kernels::ToImage(up.plane(c), up.width(), up.height());
    planes.push_back(kernels::QuantizeImage(
        kernels::ConvolveSeparable(img, kernel.taps()), target.max_value()));
  }
  return PlanarFrame(up.width(), up.height(), target, up.channel_order(),
                     std::move(planes));
}

}  // namespace

PlanarFrame GaussianUpsample(const PlanarFrame& frame, BitDepth target,
                             double sigma) {
  CheckUpTarget(frame.depth(), target);
  return UpsampleChecked(frame, target, GaussianKernel(sigma));
}

VideoSequence GaussianUpsample(const VideoSequence& seq, BitDepth target,
                               double sigma) {
  return GaussianUpsample(seq, target, std::vector<double>(seq.size(), sigma));
}

VideoSequence GaussianUpsample(const VideoSequence& seq, BitDepth target,
                               const std::vector<double>& sigmas) {
  CheckUpTarget(seq.depth(), target);
  if (sigmas.size() != seq.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "one sigma per frame is required");
  }
  std::vector<PlanarFrame> frames;
  frames.reserve(seq.size());
  for (size_t t = 0; t < seq.size(); ++t) {
    frames.push_back(
        UpsampleChecked(seq.frame(t), target, GaussianKernel(sigmas[t])));
  }
  return VideoSequence(std::move(frames), seq.fps(), seq.name());
}

}  // namespace bitdepth
