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

#ifndef BITDEPTH_FRAME_H_
#define BITDEPTH_FRAME_H_

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bitdepth {

// Logical bit depth of a sample, 1..16 bits.
class BitDepth {
 public:
  static constexpr int kMinBits = 1;
  static constexpr int kMaxBits = 16;

  // Throws Error(kInvalidArgument) outside [1, 16].
  explicit BitDepth(int bits);

  int bits() const { return bits_; }
  // 2^bits - 1, the full-range maximum code value.
  uint32_t max_value() const { return (uint32_t{1} << bits_) - 1; }

  friend bool operator==(BitDepth, BitDepth) = default;
  friend auto operator<=>(BitDepth, BitDepth) = default;

 private:
  int bits_;
};

// Rounds to nearest, ties away from zero. Every quantizer in the library
// uses this rule.
inline double RoundHalfAway(double v) { return std::round(v); }

// One plane of samples, row-major, stored in 16-bit containers.
using Plane = std::vector<uint16_t>;

// An immutable frame of independent colour planes. Every plane has
// width*height samples and every sample is <= depth().max_value().
class PlanarFrame {
 public:
  // Validates geometry and sample range; throws Error on violation
  // (kInvalidArgument for geometry, kSampleRange for out-of-range samples).
  PlanarFrame(int width, int height, BitDepth depth, std::string channel_order,
              std::vector<Plane> planes);

  // A frame with every sample of every plane set to `value`.
  static PlanarFrame Filled(int width, int height, BitDepth depth,
                            std::string channel_order, uint16_t value);

  int width() const { return width_; }
  int height() const { return height_; }
  BitDepth depth() const { return depth_; }
  const std::string& channel_order() const { return channel_order_; }
  int channels() const { return static_cast<int>(planes_.size()); }
  size_t samples_per_plane() const {
    return static_cast<size_t>(width_) * static_cast<size_t>(height_);
  }

  std::span<const uint16_t> plane(int c) const { return planes_.at(c); }
  uint16_t at(int c, int x, int y) const {
    return planes_[c][static_cast<size_t>(y) * width_ + x];
  }

  // True when geometry, depth, and channel order all agree.
  bool SameLayout(const PlanarFrame& other) const;

  friend bool operator==(const PlanarFrame&, const PlanarFrame&) = default;

 private:
  int width_;
  int height_;
  BitDepth depth_;
  std::string channel_order_;
  std::vector<Plane> planes_;
};

// Ordered, non-empty list of frames sharing one layout.
class VideoSequence {
 public:
  VideoSequence(std::vector<PlanarFrame> frames, double fps, std::string name);

  const std::vector<PlanarFrame>& frames() const { return frames_; }
  const PlanarFrame& frame(size_t i) const { return frames_.at(i); }
  size_t size() const { return frames_.size(); }
  double fps() const { return fps_; }
  const std::string& name() const { return name_; }

  int width() const { return frames_.front().width(); }
  int height() const { return frames_.front().height(); }
  BitDepth depth() const { return frames_.front().depth(); }
  int channels() const { return frames_.front().channels(); }
  const std::string& channel_order() const {
    return frames_.front().channel_order();
  }

  friend bool operator==(const VideoSequence&, const VideoSequence&) = default;

 private:
  std::vector<PlanarFrame> frames_;
  double fps_;
  std::string name_;
};

}  // namespace bitdepth

#endif  // BITDEPTH_FRAME_H_
