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

#ifndef BITDEPTH_RAW_IO_H_
#define BITDEPTH_RAW_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>

#include "bitdepth/frame.h"

namespace bitdepth {

// Sidecar description of a header-less raw sample file. Samples are planar
// (plane-major within a frame, frames concatenated) little-endian uint16.
struct SequenceDescriptor {
  static constexpr const char* kSampleLayout = "planar_u16le";

  int width = 0;
  int height = 0;
  double fps = 0.0;
  int bit_depth = 0;
  std::string channel_order;
  std::string sample_layout = kSampleLayout;
  int64_t frame_count = 0;
  std::string name;

  int channels() const { return static_cast<int>(channel_order.size()); }
  // Expected size of the sample file in bytes.
  uint64_t DataBytes() const;

  static SequenceDescriptor For(const VideoSequence& seq);

  // Throws Error(kFormat) on malformed or out-of-range fields.
  static SequenceDescriptor FromJson(const std::string& text);
  std::string ToJson() const;

  friend bool operator==(const SequenceDescriptor&,
                         const SequenceDescriptor&) = default;
};

// Path of the descriptor conventionally paired with a data file
// ("clip.raw" -> "clip.json").
std::filesystem::path DefaultDescriptorPath(const std::filesystem::path& data);

// Errors are distinct per cause: kNotFound/kIo for unreadable files, kFormat
// for a malformed descriptor, kLengthMismatch when the data size disagrees
// with the descriptor, kSampleRange when a sample exceeds the bit depth.
VideoSequence LoadRawVideo(const std::filesystem::path& data_path,
                           const std::filesystem::path& descriptor_path);

// Writes samples and descriptor such that LoadRawVideo restores `seq`
// exactly. Throws Error(kIo) on failure.
void WriteRawVideo(const VideoSequence& seq,
                   const std::filesystem::path& data_path,
                   const std::filesystem::path& descriptor_path);

}  // namespace bitdepth

#endif  // BITDEPTH_RAW_IO_H_
