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

#ifndef BITDEPTH_SYNTHETIC_H_
#define BITDEPTH_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "bitdepth/frame.h"

namespace bitdepth {

enum class SyntheticKind {
  kFlat,
  kHorizontalRamp,
  kRadialGradient,
  kUniformNoise,
  kRampPlusNoise,
  kMovingRamp,
};

struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::kHorizontalRamp;
  // Only used by kFlat.
  uint16_t flat_value = 0;

  // Accepts "flat", "flat:<value>", "horizontal_ramp" (alias "ramp"),
  // "radial_gradient" ("radial"), "uniform_noise" ("noise"),
  // "ramp_plus_noise", "moving_ramp". Throws Error(kInvalidArgument).
  static SyntheticSpec Parse(std::string_view text);
};

std::string_view SyntheticKindName(SyntheticKind kind);

// Deterministic test content. Ramp kinds span 0..max_value(); noise kinds
// draw from a fixed-algorithm generator seeded with `seed`. Generated frames
// carry channel order "RGB" for three planes and "Y" for one.
VideoSequence GenerateSynthetic(const SyntheticSpec& spec, int width,
                                int height, int frames, BitDepth depth,
                                uint64_t seed, int channels = 3,
                                double fps = 60.0);

}  // namespace bitdepth

#endif  // BITDEPTH_SYNTHETIC_H_
