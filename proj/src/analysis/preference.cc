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

#include <map>
#include <tuple>
#include <vector>

#include "bitdepth/analysis.h"
#include "bitdepth/error.h"

namespace bitdepth {

PreferenceTable ViewerPreference(std::span<const RatingRecord> records) {
  // (participant, sequence, depth) -> method -> score
  using Key = std::tuple<std::string, std::string, int>;
  std::map<Key, std::map<Method, double>> groups;
  for (const RatingRecord& r : records) {
    if (r.method == Method::kReference) continue;
    groups[{r.participant_id, r.sequence, r.bit_depth}][r.method] = r.score;
  }

  std::map<int, std::map<Method, double>> votes;
  PreferenceTable table;
  for (const auto& [key, scores] : groups) {
    if (scores.size() < 2) continue;
    const int depth = std::get<2>(key);
    double top = -1.0;
    for (const auto& [m, s] : scores) top = std::max(top, s);
    std::vector<Method> winners;
    for (const auto& [m, s] : scores) {
      if (s == top) winners.push_back(m);
    }
    for (Method m : winners) votes[depth][m] += 1.0 / winners.size();
    // Methods that were compared but lost still appear with 0%.
    for (const auto& [m, s] : scores) votes[depth].try_emplace(m, 0.0);
    ++table.comparisons[depth];
  }
  if (table.comparisons.empty()) {
    throw Error(ErrorKind::kPrecondition,
                "no participant rated two methods at the same bit depth");
  }
  for (const auto& [depth, by_method] : votes) {
    const double total = static_cast<double>(table.comparisons[depth]);
    for (const auto& [m, v] : by_method) {
      table.percent[depth][m] = 100.0 * v / total;
    }
  }
  return table;
}

}  // namespace bitdepth
