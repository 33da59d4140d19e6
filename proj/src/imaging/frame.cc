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

#include "bitdepth/frame.h"

#include <algorithm>
#include <string>
#include <utility>

#include "bitdepth/error.h"

namespace bitdepth {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid_argument";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kFormat:
      return "format";
    case ErrorKind::kLengthMismatch:
      return "length_mismatch";
    case ErrorKind::kSampleRange:
      return "sample_range";
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kNotFound:
      return "not_found";
    case ErrorKind::kState:
      return "state";
  }
  return "unknown";
}

BitDepth::BitDepth(int bits) : bits_(bits) {
  if (bits < kMinBits || bits > kMaxBits) {
    throw Error(ErrorKind::kInvalidArgument,
                "bit depth " + std::to_string(bits) + " outside [1, 16]");
  }
}

PlanarFrame::PlanarFrame(int width, int height, BitDepth depth,
                         std::string channel_order, std::vector<Plane> planes)
    : width_(width),
      height_(height),
      depth_(depth),
      channel_order_(std::move(channel_order)),
      planes_(std::move(planes)) {
  if (width_ <= 0 || height_ <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "frame dimensions must be > 0");
  }
  if (planes_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "frame has no planes");
  }
  if (channel_order_.size() != planes_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "channel order '" + channel_order_ + "' does not match " +
                    std::to_string(planes_.size()) + " planes");
  }
  const size_t n = samples_per_plane();
  const uint32_t max_value = depth_.max_value();
  for (const Plane& p : planes_) {
    if (p.size() != n) {
      throw Error(ErrorKind::kInvalidArgument, "plane size mismatch");
    }
    const auto it = std::max_element(p.begin(), p.end());
    if (*it > max_value) {
      throw Error(ErrorKind::kSampleRange,
                  "sample " + std::to_string(*it) + " exceeds " +
                      std::to_string(max_value) + " at " +
                      std::to_string(depth_.bits()) + " bits");
    }
  }
}

PlanarFrame PlanarFrame::Filled(int width, int height, BitDepth depth,
                                std::string channel_order, uint16_t value) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "frame dimensions must be > 0");
  }
  const size_t n = static_cast<size_t>(width) * height;
  std::vector<Plane> planes(channel_order.size(), Plane(n, value));
  return PlanarFrame(width, height, depth, std::move(channel_order),
                     std::move(planes));
}

bool PlanarFrame::SameLayout(const PlanarFrame& other) const {
  return width_ == other.width_ && height_ == other.height_ &&
         depth_ == other.depth_ && channel_order_ == other.channel_order_;
}

VideoSequence::VideoSequence(std::vector<PlanarFrame> frames, double fps,
                             std::string name)
    : frames_(std::move(frames)), fps_(fps), name_(std::move(name)) {
  if (frames_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "sequence has no frames");
  }
  if (!(fps_ > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "fps must be positive");
  }
  for (const PlanarFrame& f : frames_) {
    if (!f.SameLayout(frames_.front())) {
      throw Error(ErrorKind::kInvalidArgument,
                  "frames in a sequence must share layout");
    }
  }
}

}  // namespace bitdepth
