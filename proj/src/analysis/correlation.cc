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
#include <numeric>
#include <vector>

#include "bitdepth/analysis.h"
#include "bitdepth/error.h"

namespace bitdepth {

std::vector<double> AverageRanks(std::span<const double> v) {
  std::vector<size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  size_t i = 0;
  while (i < idx.size()) {
    size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    // Positions i..j (0-based) share ranks i+1..j+1.
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double PearsonCorrelation(std::span<const double> a,
                          std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw Error(ErrorKind::kPrecondition,
                "correlation needs two equal-length vectors of >= 2 values");
  }
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
    sab += (a[i] - ma) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw Error(ErrorKind::kPrecondition,
                "correlation undefined for a zero-variance input");
  }
  return sab / std::sqrt(saa * sbb);
}

double SpearmanCorrelation(std::span<const double> a,
                           std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kPrecondition, "correlation: length mismatch");
  }
  const std::vector<double> ra = AverageRanks(a);
  const std::vector<double> rb = AverageRanks(b);
  return PearsonCorrelation(ra, rb);
}

CorrelationStats ComputeCorrelationStats(
    std::span<const double> metric_scores, std::span<const double> fitted,
    std::span<const double> dmos, std::span<const double> per_condition_std) {
  const size_t n = dmos.size();
  if (metric_scores.size() != n || fitted.size() != n ||
      per_condition_std.size() != n || n == 0) {
    throw Error(ErrorKind::kPrecondition,
                "correlation statistics: length mismatch");
  }
  CorrelationStats s;
  s.srocc = SpearmanCorrelation(metric_scores, dmos);
  s.lcc = PearsonCorrelation(fitted, dmos);
  double sq = 0.0;
  size_t outliers = 0;
  for (size_t i = 0; i < n; ++i) {
    const double err = fitted[i] - dmos[i];
    sq += err * err;
    if (std::abs(err) > 2.0 * per_condition_std[i]) ++outliers;
  }
  s.rmse = std::sqrt(sq / n);
  s.outlier_ratio = static_cast<double>(outliers) / n;
  return s;
}

}  // namespace bitdepth
