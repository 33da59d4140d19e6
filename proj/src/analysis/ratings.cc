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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bitdepth/analysis.h"
#include "bitdepth/error.h"

namespace bitdepth {
namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string Trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Error LineError(size_t line, const std::string& what) {
  return Error(ErrorKind::kFormat,
               "ratings line " + std::to_string(line) + ": " + what);
}

}  // namespace

Method ParseMethod(std::string_view name) {
  std::string key(name);
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  if (key == "linear") return Method::kLinear;
  if (key == "error_diffusion") return Method::kErrorDiffusion;
  if (key == "adaptive_gaussian") return Method::kAdaptiveGaussian;
  if (key == "reference") return Method::kReference;
  throw Error(ErrorKind::kFormat, "unknown method '" + std::string(name) + "'");
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kLinear:
      return "linear";
    case Method::kErrorDiffusion:
      return "error_diffusion";
    case Method::kAdaptiveGaussian:
      return "adaptive_gaussian";
    case Method::kReference:
      return "reference";
  }
  return "unknown";
}

std::string ToString(const Condition& c) {
  return c.sequence + "/" + std::string(MethodName(c.method)) + "/" +
         std::to_string(c.bit_depth);
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<RatingRecord> ReadRatings(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || Trim(line) != kRatingsHeader) {
    throw LineError(1, "expected header '" + std::string(kRatingsHeader) +
                           "'");
  }
  std::vector<RatingRecord> out;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> f = SplitCsv(line);
    if (f.size() != 5) {
      throw LineError(line_no, "expected 5 fields, got " +
                                   std::to_string(f.size()));
    }
    RatingRecord r;
    r.participant_id = Trim(f[0]);
    r.sequence = Trim(f[1]);
    if (r.participant_id.empty() || r.sequence.empty()) {
      throw LineError(line_no, "empty participant or sequence");
    }
    try {
      r.method = ParseMethod(Trim(f[2]));
    } catch (const Error& e) {
      throw LineError(line_no, e.what());
    }
    const std::string depth = Trim(f[3]);
    const auto [dp, dec] =
        std::from_chars(depth.data(), depth.data() + depth.size(), r.bit_depth);
    if (dec != std::errc() || dp != depth.data() + depth.size() ||
        r.bit_depth < 1 || r.bit_depth > 16) {
      throw LineError(line_no, "bad bit_depth '" + depth + "'");
    }
    const std::string score = Trim(f[4]);
    const auto [sp, sec] =
        std::from_chars(score.data(), score.data() + score.size(), r.score);
    if (sec != std::errc() || sp != score.data() + score.size()) {
      throw LineError(line_no, "bad score '" + score + "'");
    }
    if (!(r.score >= kScoreMin && r.score <= kScoreMax)) {
      throw LineError(line_no, "score " + score + " outside [0, 5]");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RatingRecord> ReadRatingsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kNotFound, "cannot open ratings '" + path + "'");
  }
  return ReadRatings(in);
}

std::string FormatRatingLine(const RatingRecord& r) {
  return r.participant_id + "," + r.sequence + "," +
         std::string(MethodName(r.method)) + "," +
         std::to_string(r.bit_depth) + "," + FormatDouble(r.score);
}

void WriteRatings(std::ostream& out, std::span<const RatingRecord> records) {
  out << kRatingsHeader << "\n";
  for (const RatingRecord& r : records) out << FormatRatingLine(r) << "\n";
}

}  // namespace bitdepth
