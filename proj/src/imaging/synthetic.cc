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

#include "bitdepth/synthetic.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bitdepth/error.h"

namespace bitdepth {
namespace {

// round(num / den) for non-negative integers, ties away from zero.
uint32_t RoundedRatio(uint64_t num, uint64_t den) {
  return static_cast<uint32_t>((2 * num + den) / (2 * den));
}

uint32_t RampValue(int x, int width, uint32_t max_value) {
  if (width <= 1) return 0;
  return RoundedRatio(static_cast<uint64_t>(x) * max_value, width - 1);
}

// Draws uniformly from [0, bound] with a fixed mapping so that output only
// depends on the mt19937_64 stream, which the standard fully specifies.
uint32_t Draw(std::mt19937_64& rng, uint32_t bound) {
  return static_cast<uint32_t>(rng() % (uint64_t{bound} + 1));
}

}  // namespace

std::string_view SyntheticKindName(SyntheticKind kind) {
  switch (kind) {
    case SyntheticKind::kFlat:
      return "flat";
    case SyntheticKind::kHorizontalRamp:
      return "horizontal_ramp";
    case SyntheticKind::kRadialGradient:
      return "radial_gradient";
    case SyntheticKind::kUniformNoise:
      return "uniform_noise";
    case SyntheticKind::kRampPlusNoise:
      return "ramp_plus_noise";
    case SyntheticKind::kMovingRamp:
      return "moving_ramp";
  }
  return "unknown";
}

SyntheticSpec SyntheticSpec::Parse(std::string_view text) {
  SyntheticSpec spec;
  std::string_view name = text;
  std::string_view arg;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  if (name == "flat") {
    spec.kind = SyntheticKind::kFlat;
    if (!arg.empty()) {
      unsigned value = 0;
      const auto [ptr, ec] =
          std::from_chars(arg.data(), arg.data() + arg.size(), value);
      if (ec != std::errc() || ptr != arg.data() + arg.size() ||
          value > 0xffff) {
        throw Error(ErrorKind::kInvalidArgument,
                    "bad flat value '" + std::string(arg) + "'");
      }
      spec.flat_value = static_cast<uint16_t>(value);
    }
    return spec;
  }
  if (!arg.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "kind '" + std::string(name) + "' takes no argument");
  }
  if (name == "horizontal_ramp" || name == "ramp") {
    spec.kind = SyntheticKind::kHorizontalRamp;
  } else if (name == "radial_gradient" || name == "radial") {
    spec.kind = SyntheticKind::kRadialGradient;
  } else if (name == "uniform_noise" || name == "noise") {
    spec.kind = SyntheticKind::kUniformNoise;
  } else if (name == "ramp_plus_noise") {
    spec.kind = SyntheticKind::kRampPlusNoise;
  } else if (name == "moving_ramp") {
    spec.kind = SyntheticKind::kMovingRamp;
  } else {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown synthetic kind '" + std::string(text) + "'");
  }
  return spec;
}

VideoSequence GenerateSynthetic(const SyntheticSpec& spec, int width,
                                int height, int frames, BitDepth depth,
                                uint64_t seed, int channels, double fps) {
  if (width <= 0 || height <= 0 || frames <= 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "synthetic dimensions must be > 0");
  }
  if (channels != 1 && channels != 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "synthetic content has 1 or 3 channels");
  }
  const uint32_t max_value = depth.max_value();
  if (spec.kind == SyntheticKind::kFlat && spec.flat_value > max_value) {
    throw Error(ErrorKind::kInvalidArgument,
                "flat value exceeds the bit depth maximum");
  }
  const std::string order = channels == 3 ? "RGB" : "Y";
  const size_t n = static_cast<size_t>(width) * height;

  std::mt19937_64 rng(seed);
  // Noise amplitude for ramp_plus_noise: a few percent of the range.
  const uint32_t amp = std::max<uint32_t>(1, (max_value + 1) / 32);
  const double cx = 0.5 * (width - 1);
  const double cy = 0.5 * (height - 1);
  const double max_radius = std::max(1e-12, std::hypot(cx, cy));
  const int step = std::max(1, width / 64);
  const int period = std::max(1, 2 * (width - 1));

  std::vector<PlanarFrame> out;
  out.reserve(frames);
  for (int t = 0; t < frames; ++t) {
    std::vector<Plane> planes;
    for (int c = 0; c < channels; ++c) {
      Plane p(n);
      for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
          uint32_t v = 0;
          switch (spec.kind) {
            case SyntheticKind::kFlat:
              v = spec.flat_value;
              break;
            case SyntheticKind::kHorizontalRamp:
              v = RampValue(x, width, max_value);
              break;
            case SyntheticKind::kRadialGradient: {
              const double r = std::hypot(x - cx, y - cy) / max_radius;
              v = static_cast<uint32_t>(RoundHalfAway(r * max_value));
              break;
            }
            case SyntheticKind::kUniformNoise:
              v = Draw(rng, max_value);
              break;
            case SyntheticKind::kRampPlusNoise: {
              const int64_t noisy = static_cast<int64_t>(
                                        RampValue(x, width, max_value)) +
                                    static_cast<int64_t>(Draw(rng, 2 * amp)) -
                                    amp;
              v = static_cast<uint32_t>(
                  std::clamp<int64_t>(noisy, 0, max_value));
              break;
            }
            case SyntheticKind::kMovingRamp: {
              // Triangle wave so the moving ramp has no wrap discontinuity.
              const int pos = (x + t * step) % period;
              const int folded = pos <= width - 1 ? pos : period - pos;
              v = RampValue(folded, width, max_value);
              break;
            }
          }
          p[static_cast<size_t>(y) * width + x] = static_cast<uint16_t>(v);
        }
      }
      planes.push_back(std::move(p));
    }
    out.emplace_back(width, height, depth, order, std::move(planes));
  }
  return VideoSequence(std::move(out), fps,
                       std::string(SyntheticKindName(spec.kind)));
}

}  // namespace bitdepth
