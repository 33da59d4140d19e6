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

#ifndef BITDEPTH_RESCALE_H_
#define BITDEPTH_RESCALE_H_

#include "bitdepth/frame.h"

namespace bitdepth {

// Linear bit-depth conversion in either direction: each sample v at depth a
// becomes round(v * M_b / M_a) at depth b, per channel.
PlanarFrame LinearRescale(const PlanarFrame& frame, BitDepth target);

VideoSequence LinearRescale(const VideoSequence& seq, BitDepth target);

}  // namespace bitdepth

#endif  // BITDEPTH_RESCALE_H_
