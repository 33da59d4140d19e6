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

#ifndef BITDEPTH_BENCH_REPORT_H_
#define BITDEPTH_BENCH_REPORT_H_

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bitdepth/analysis.h"

namespace bitdepth {

// One row of a metric score table:
//   sequence,method,bit_depth,frame,<metric>...
// `frame` is a frame index or "mean" for the sequence average.
struct MetricRow {
  Condition condition;
  std::string frame;
  std::map<std::string, double> values;
};

inline constexpr std::string_view kMetricKeyColumns =
    "sequence,method,bit_depth,frame";
inline constexpr std::string_view kSequenceMeanFrame = "mean";

// Throws Error(kFormat) on schema violations.
std::vector<MetricRow> ReadMetricScores(std::istream& in);
std::vector<MetricRow> ReadMetricScoresFile(const std::string& path);

// Sequence-level score per condition and metric: the "mean" row when
// present, otherwise the average of the frame rows.
std::map<Condition, std::map<std::string, double>> SequenceMetricScores(
    std::span<const MetricRow> rows);

struct BenchEntry {
  std::string metric;
  size_t n = 0;
  LogisticFit fit;
  CorrelationStats stats;
};

struct BenchReport {
  std::vector<BenchEntry> entries;
};

// compute MOS -> DMOS -> per metric: logistic fit of DMOS on the metric's
// sequence score, then correlation statistics over the conditions that
// have both. Throws Error(kPrecondition) if ratings lack references or a
// metric has fewer than five usable conditions.
BenchReport RunBench(std::span<const RatingRecord> ratings,
                     std::span<const MetricRow> metric_rows);

// Statistics as rows, metrics as columns.
std::string FormatBenchTable(const BenchReport& report);
// "<metric>.<field>=<value>" lines, including the fitted parameters.
std::string FormatBenchKeyValue(const BenchReport& report);

}  // namespace bitdepth

#endif  // BITDEPTH_BENCH_REPORT_H_
