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

#include "bitdepth/rescale.h"

#include <utility>
#include <vector>

#include "bitdepth/kernels.h"

namespace bitdepth {

PlanarFrame LinearRescale(const PlanarFrame& frame, BitDepth target) {
  std::vector<Plane> planes;
  planes.reserve(frame.channels());
  for (int c = 0; c < frame.channels(); ++c) {
    planes.push_back(kernels::RescalePlane(
        frame.plane(c), frame.depth().max_value(), target.max_value()));
  }
  return PlanarFrame(frame.width(), frame.height(), target,
                     frame.channel_order(), std::move(planes));
}

VideoSequence LinearRescale(const VideoSequence& seq, BitDepth target) {
  std::vector<PlanarFrame> frames;
  frames.reserve(seq.size());
  for (const PlanarFrame& f : seq.frames()) {
    frames.push_back(LinearRescale(f, target));
  }
  return VideoSequence(std::move(frames), seq.fps(), seq.name());
}

}  // namespace bitdepth
