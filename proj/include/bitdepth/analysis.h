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

#ifndef BITDEPTH_ANALYSIS_H_
#define BITDEPTH_ANALYSIS_H_

// Subjective-score statistics: MOS/DMOS, viewer preference, critical bit
// depth, logistic mapping of metric scores, and correlation statistics.

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bitdepth {

enum class Method { kLinear, kErrorDiffusion, kAdaptiveGaussian, kReference };

// Accepts "linear", "error_diffusion", "adaptive_gaussian", "reference";
// hyphens may replace underscores. Throws Error(kFormat).
Method ParseMethod(std::string_view name);
std::string_view MethodName(Method method);

// The opinion scale bounds used when collecting ratings.
inline constexpr double kScoreMin = 0.0;
inline constexpr double kScoreMax = 5.0;
// MOS is reported on 0..100.
inline constexpr double kMosScale = 100.0 / kScoreMax;

struct Condition {
  std::string sequence;
  Method method = Method::kReference;
  int bit_depth = 0;

  friend auto operator<=>(const Condition&, const Condition&) = default;
  friend bool operator==(const Condition&, const Condition&) = default;
};

std::string ToString(const Condition& c);

struct RatingRecord {
  std::string participant_id;
  std::string sequence;
  Method method = Method::kReference;
  int bit_depth = 0;
  double score = 0.0;

  Condition condition() const { return {sequence, method, bit_depth}; }
  friend bool operator==(const RatingRecord&, const RatingRecord&) = default;
};

// Ratings ingest format: a header row followed by one record per line,
// columns participant_id,sequence,method,bit_depth,score. Scores are
// written in shortest round-trip form. Throws Error(kFormat) with the
// offending line number.
inline constexpr std::string_view kRatingsHeader =
    "participant_id,sequence,method,bit_depth,score";
std::vector<RatingRecord> ReadRatings(std::istream& in);
std::vector<RatingRecord> ReadRatingsFile(const std::string& path);
void WriteRatings(std::ostream& out, std::span<const RatingRecord> records);
std::string FormatRatingLine(const RatingRecord& r);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double v);

struct MosEntry {
  Condition condition;
  double mos = 0.0;        // 0..100
  double std_error = 0.0;  // sample std / sqrt(n), 0..100 scale
  size_t n = 0;
  double raw_std = 0.0;    // sample std of the raw 0..5 scores

  double ScaledStd() const { return raw_std * kMosScale; }
};

// Per-condition MOS. Output is sorted by condition. Throws
// Error(kPrecondition) for a condition with fewer than two ratings.
std::vector<MosEntry> ComputeMos(std::span<const RatingRecord> records);

enum class MosPooling {
  kPoolRawScores,     // every rating of the group counts once
  kAverageSequences,  // mean of per-sequence MOS; std_error across sequences
};

// Aggregates across sequences per (method, bit depth). The resulting
// entries carry sequence "*".
std::vector<MosEntry> AggregateMos(std::span<const RatingRecord> records,
                                   MosPooling pooling);

struct DmosEntry {
  Condition condition;
  double dmos = 0.0;
  // Standard deviation of the condition's individual scores on 0..100.
  double score_std = 0.0;
};

// dmos = mos(reference of the same sequence) - mos(condition); reference
// conditions are not emitted. Throws Error(kPrecondition) naming the
// sequence when it has no reference entry.
std::vector<DmosEntry> ComputeDmos(std::span<const MosEntry> mos);

// DMOS_p(x) = b2 + (b1 - b2) / (1 + exp(-(x - b3) / |b4|))
struct LogisticFit {
  std::array<double, 4> beta{};
  bool converged = false;
  double sse = 0.0;

  double Predict(double x) const;
  std::vector<double> Predict(std::span<const double> x) const;
};

// Least-squares fit by Nelder-Mead simplex from five deterministic,
// data-driven starting points; returns the lowest-SSE result. Throws
// Error(kPrecondition) for fewer than five points, non-finite values, or
// constant metric scores.
LogisticFit FitLogistic(std::span<const double> metric_scores,
                        std::span<const double> dmos);

// Ranks starting at 1; tied values share their average rank.
std::vector<double> AverageRanks(std::span<const double> v);
// Throws Error(kPrecondition) on length mismatch or zero variance.
double PearsonCorrelation(std::span<const double> a,
                          std::span<const double> b);
double SpearmanCorrelation(std::span<const double> a,
                           std::span<const double> b);

struct CorrelationStats {
  double srocc = 0.0;
  double lcc = 0.0;
  double outlier_ratio = 0.0;
  double rmse = 0.0;
};

// SROCC between raw metric scores and DMOS; LCC and RMSE between fitted
// predictions and DMOS; outlier ratio is the fraction of points whose
// prediction error exceeds twice the condition's score standard deviation.
CorrelationStats ComputeCorrelationStats(
    std::span<const double> metric_scores, std::span<const double> fitted,
    std::span<const double> dmos, std::span<const double> per_condition_std);

struct PreferenceTable {
  // bit depth -> method -> percentage of votes (sums to 100 per depth).
  std::map<int, std::map<Method, double>> percent;
  // bit depth -> number of (participant, sequence) comparisons.
  std::map<int, size_t> comparisons;
};

// One vote per (participant, sequence, bit depth) for the method with the
// highest score among the non-reference methods rated; exact ties split
// the vote. Groups with fewer than two methods are skipped. Throws
// Error(kPrecondition) if no group is comparable.
PreferenceTable ViewerPreference(std::span<const RatingRecord> records);

// Smallest tested depth d such that, for every tested depth >= d and every
// sequence, the interval mos +/- std_error of `method` overlaps the
// reference's. Returns the reference (native) depth when even the largest
// tested depth fails. Throws Error(kPrecondition) when a sequence lacks a
// reference entry or the method has no entries.
int CriticalBitDepth(std::span<const MosEntry> mos, Method method);

}  // namespace bitdepth

#endif  // BITDEPTH_ANALYSIS_H_
