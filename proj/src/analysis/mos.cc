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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "bitdepth/analysis.h"
#include "bitdepth/error.h"

namespace bitdepth {
namespace {

struct Summary {
  double mean;
  double sample_std;
};

Summary Summarize(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / v.size();
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, v.size() > 1 ? std::sqrt(ss / (v.size() - 1)) : 0.0};
}

MosEntry EntryFromScores(const Condition& c, const std::vector<double>& raw) {
  if (raw.size() < 2) {
    throw Error(ErrorKind::kPrecondition,
                "condition " + ToString(c) + " has " +
                    std::to_string(raw.size()) + " rating(s), need >= 2");
  }
  const Summary s = Summarize(raw);
  MosEntry e;
  e.condition = c;
  e.mos = kMosScale * s.mean;
  e.raw_std = s.sample_std;
  e.n = raw.size();
  e.std_error = kMosScale * s.sample_std / std::sqrt(static_cast<double>(e.n));
  return e;
}

}  // namespace

std::vector<MosEntry> ComputeMos(std::span<const RatingRecord> records) {
  std::map<Condition, std::vector<double>> groups;
  for (const RatingRecord& r : records) {
    groups[r.condition()].push_back(r.score);
  }
  std::vector<MosEntry> out;
  out.reserve(groups.size());
  for (const auto& [c, scores] : groups) {
    out.push_back(EntryFromScores(c, scores));
  }
  return out;
}

std::vector<MosEntry> AggregateMos(std::span<const RatingRecord> records,
                                   MosPooling pooling) {
  std::map<Condition, std::vector<double>> pooled;
  for (const RatingRecord& r : records) {
    pooled[{"*", r.method, r.bit_depth}].push_back(r.score);
  }
  std::vector<MosEntry> out;
  if (pooling == MosPooling::kPoolRawScores) {
    for (const auto& [c, scores] : pooled) {
      out.push_back(EntryFromScores(c, scores));
    }
    return out;
  }
  // Average of per-sequence MOS values; spread measured across sequences.
  std::map<Condition, std::vector<double>> per_sequence;
  for (const MosEntry& e : ComputeMos(records)) {
    per_sequence[{"*", e.condition.method, e.condition.bit_depth}].push_back(
        e.mos / kMosScale);
  }
  for (const auto& [c, means] : per_sequence) {
    MosEntry e;
    e.condition = c;
    const Summary s = Summarize(means);
    e.mos = kMosScale * s.mean;
    e.raw_std = s.sample_std;
    e.n = means.size();
    e.std_error =
        kMosScale * s.sample_std / std::sqrt(static_cast<double>(e.n));
    out.push_back(e);
  }
  return out;
}

std::vector<DmosEntry> ComputeDmos(std::span<const MosEntry> mos) {
  std::map<std::string, double> reference;
  for (const MosEntry& e : mos) {
    if (e.condition.method == Method::kReference) {
      reference[e.condition.sequence] = e.mos;
    }
  }
  std::vector<DmosEntry> out;
  for (const MosEntry& e : mos) {
    if (e.condition.method == Method::kReference) continue;
    const auto it = reference.find(e.condition.sequence);
    if (it == reference.end()) {
      throw Error(ErrorKind::kPrecondition,
                  "sequence '" + e.condition.sequence +
                      "' has no reference rating");
    }
    out.push_back({e.condition, it->second - e.mos, e.ScaledStd()});
  }
  return out;
}

int CriticalBitDepth(std::span<const MosEntry> mos, Method method) {
  if (method == Method::kReference) {
    throw Error(ErrorKind::kInvalidArgument,
                "critical bit depth is defined for adaptation methods");
  }
  std::map<std::string, const MosEntry*> reference;
  for (const MosEntry& e : mos) {
    if (e.condition.method == Method::kReference) {
      reference[e.condition.sequence] = &e;
    }
  }
  std::map<int, std::vector<const MosEntry*>, std::greater<>> by_depth;
  for (const MosEntry& e : mos) {
    if (e.condition.method == method) by_depth[e.condition.bit_depth].push_back(&e);
  }
  if (by_depth.empty()) {
    throw Error(ErrorKind::kPrecondition,
                "no entries for method " + std::string(MethodName(method)));
  }
  int native = 0;
  for (const auto& [depth, entries] : by_depth) {
    for (const MosEntry* e : entries) {
      const auto it = reference.find(e->condition.sequence);
      if (it == reference.end()) {
        throw Error(ErrorKind::kPrecondition,
                    "sequence '" + e->condition.sequence +
                        "' has no reference entry");
      }
      native = std::max(native, it->second->condition.bit_depth);
    }
  }

  // Walk from the deepest tested depth down; stop at the first depth where
  // some sequence's error bar separates from its reference.
  int critical = native;
  for (const auto& [depth, entries] : by_depth) {
    const bool all_overlap =
        std::all_of(entries.begin(), entries.end(), [&](const MosEntry* e) {
          const MosEntry* ref = reference.at(e->condition.sequence);
          return std::abs(e->mos - ref->mos) <= e->std_error + ref->std_error;
        });
    if (!all_overlap) break;
    critical = depth;
  }
  return critical;
}

}  // namespace bitdepth
