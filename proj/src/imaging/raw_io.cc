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

#include "bitdepth/raw_io.h"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bitdepth/error.h"
#include "json.hpp"

namespace bitdepth {
namespace {

using json = nlohmann::ordered_json;

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kNotFound,
                "cannot open descriptor '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
T Field(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorKind::kFormat,
                std::string("descriptor missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::kFormat,
                std::string("descriptor field '") + key + "' has wrong type");
  }
}

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

uint64_t SequenceDescriptor::DataBytes() const {
  return static_cast<uint64_t>(frame_count) * static_cast<uint64_t>(width) *
         static_cast<uint64_t>(height) * static_cast<uint64_t>(channels()) * 2;
}

SequenceDescriptor SequenceDescriptor::For(const VideoSequence& seq) {
  SequenceDescriptor d;
  d.width = seq.width();
  d.height = seq.height();
  d.fps = seq.fps();
  d.bit_depth = seq.depth().bits();
  d.channel_order = seq.channel_order();
  d.frame_count = static_cast<int64_t>(seq.size());
  d.name = seq.name();
  return d;
}

SequenceDescriptor SequenceDescriptor::FromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kFormat,
                std::string("descriptor is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorKind::kFormat, "descriptor must be a JSON object");
  }
  SequenceDescriptor d;
  d.width = Field<int>(j, "width");
  d.height = Field<int>(j, "height");
  d.fps = Field<double>(j, "fps");
  d.bit_depth = Field<int>(j, "bit_depth");
  d.channel_order = Field<std::string>(j, "channel_order");
  d.sample_layout = Field<std::string>(j, "sample_layout");
  d.frame_count = Field<int64_t>(j, "frame_count");
  d.name = j.value("name", std::string());

  if (d.width <= 0 || d.height <= 0) {
    throw Error(ErrorKind::kFormat, "descriptor dimensions must be > 0");
  }
  if (!(d.fps > 0.0)) {
    throw Error(ErrorKind::kFormat, "descriptor fps must be > 0");
  }
  if (d.bit_depth < BitDepth::kMinBits || d.bit_depth > BitDepth::kMaxBits) {
    throw Error(ErrorKind::kFormat, "descriptor bit_depth outside [1, 16]");
  }
  if (d.channel_order.empty()) {
    throw Error(ErrorKind::kFormat, "descriptor channel_order is empty");
  }
  if (d.sample_layout != kSampleLayout) {
    throw Error(ErrorKind::kFormat,
                "unsupported sample_layout '" + d.sample_layout + "'");
  }
  if (d.frame_count <= 0) {
    throw Error(ErrorKind::kFormat, "descriptor frame_count must be > 0");
  }
  return d;
}

std::string SequenceDescriptor::ToJson() const {
  json j;
  j["name"] = name;
  j["width"] = width;
  j["height"] = height;
  j["fps"] = fps;
  j["bit_depth"] = bit_depth;
  j["channel_order"] = channel_order;
  j["sample_layout"] = sample_layout;
  j["frame_count"] = frame_count;
  return j.dump(2) + "\n";
}

std::filesystem::path DefaultDescriptorPath(
    const std::filesystem::path& data) {
  std::filesystem::path p = data;
  p.replace_extension(".json");
  return p;
}

VideoSequence LoadRawVideo(const std::filesystem::path& data_path,
                           const std::filesystem::path& descriptor_path) {
  const SequenceDescriptor d =
      SequenceDescriptor::FromJson(ReadText(descriptor_path));

  std::error_code ec;
  const auto size = std::filesystem::file_size(data_path, ec);
  if (ec) {
    throw Error(ErrorKind::kNotFound,
                "cannot open data file '" + data_path.string() + "'");
  }
  if (size != d.DataBytes()) {
    throw Error(ErrorKind::kLengthMismatch,
                "data file '" + data_path.string() + "' holds " +
                    std::to_string(size) + " bytes, descriptor implies " +
                    std::to_string(d.DataBytes()));
  }

  FilePtr f(std::fopen(data_path.string().c_str(), "rb"));
  if (!f) {
    throw Error(ErrorKind::kIo,
                "cannot open data file '" + data_path.string() + "'");
  }
  const BitDepth depth(d.bit_depth);
  const size_t n = static_cast<size_t>(d.width) * d.height;
  std::vector<uint8_t> bytes(n * 2);
  std::vector<PlanarFrame> frames;
  frames.reserve(d.frame_count);
  for (int64_t t = 0; t < d.frame_count; ++t) {
    std::vector<Plane> planes;
    for (int c = 0; c < d.channels(); ++c) {
      if (std::fread(bytes.data(), 1, bytes.size(), f.get()) != bytes.size()) {
        throw Error(ErrorKind::kIo, "short read from '" +
                                        data_path.string() + "'");
      }
      Plane p(n);
      for (size_t i = 0; i < n; ++i) {
        p[i] = static_cast<uint16_t>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
      }
      planes.push_back(std::move(p));
    }
    try {
      frames.emplace_back(d.width, d.height, depth, d.channel_order,
                          std::move(planes));
    } catch (const Error& e) {
      throw Error(e.kind(), "frame " + std::to_string(t) + ": " + e.what());
    }
  }
  return VideoSequence(std::move(frames), d.fps, d.name);
}

void WriteRawVideo(const VideoSequence& seq,
                   const std::filesystem::path& data_path,
                   const std::filesystem::path& descriptor_path) {
  if (data_path.empty() || descriptor_path.empty()) {
    throw Error(ErrorKind::kIo, "empty output path");
  }
  {
    FilePtr f(std::fopen(data_path.string().c_str(), "wb"));
    if (!f) {
      throw Error(ErrorKind::kIo,
                  "cannot create '" + data_path.string() + "'");
    }
    std::vector<uint8_t> bytes;
    for (const PlanarFrame& frame : seq.frames()) {
      for (int c = 0; c < frame.channels(); ++c) {
        const auto plane = frame.plane(c);
        bytes.resize(plane.size() * 2);
        for (size_t i = 0; i < plane.size(); ++i) {
          bytes[2 * i] = static_cast<uint8_t>(plane[i] & 0xff);
          bytes[2 * i + 1] = static_cast<uint8_t>(plane[i] >> 8);
        }
        if (std::fwrite(bytes.data(), 1, bytes.size(), f.get()) !=
            bytes.size()) {
          throw Error(ErrorKind::kIo,
                      "write to '" + data_path.string() + "' failed");
        }
      }
    }
    if (std::fflush(f.get()) != 0) {
      throw Error(ErrorKind::kIo, "flush of '" + data_path.string() +
                                      "' failed");
    }
  }
  std::ofstream out(descriptor_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::kIo,
                "cannot create '" + descriptor_path.string() + "'");
  }
  out << SequenceDescriptor::For(seq).ToJson();
  if (!out) {
    throw Error(ErrorKind::kIo,
                "write to '" + descriptor_path.string() + "' failed");
  }
}

}  // namespace bitdepth
