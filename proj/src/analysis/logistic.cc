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
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "bitdepth/analysis.h"
#include "bitdepth/error.h"

namespace bitdepth {
namespace {

using Params = std::array<double, 4>;

double Logistic(const Params& b, double x) {
  const double scale = std::max(std::abs(b[3]), 1e-12);
  return b[1] + (b[0] - b[1]) / (1.0 + std::exp(-(x - b[2]) / scale));
}

struct SimplexResult {
  Params x;
  double f;
  bool converged;
};

// Nelder-Mead with the standard reflection/expansion/contraction/shrink
// coefficients (1, 2, 1/2, 1/2).
template <typename F>
SimplexResult NelderMead(const F& f, const Params& start, const Params& step,
                         int max_iter) {
  constexpr int kN = 4;
  std::array<Params, kN + 1> pts;
  std::array<double, kN + 1> vals;
  pts[0] = start;
  for (int i = 0; i < kN; ++i) {
    pts[i + 1] = start;
    pts[i + 1][i] += step[i];
  }
  for (int i = 0; i <= kN; ++i) vals[i] = f(pts[i]);

  std::array<int, kN + 1> order;
  bool converged = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0];
    const int worst = order[kN];
    const int second = order[kN - 1];

    double size = 0.0;
    for (int i = 0; i <= kN; ++i) {
      for (int d = 0; d < kN; ++d) {
        size = std::max(size, std::abs(pts[i][d] - pts[best][d]) /
                                  (1.0 + std::abs(pts[best][d])));
      }
    }
    const double spread = vals[worst] - vals[best];
    if (spread <= 1e-15 * (1.0 + std::abs(vals[best])) && size < 1e-10) {
      converged = true;
      break;
    }

    Params centroid{};
    for (int i = 0; i <= kN; ++i) {
      if (i == worst) continue;
      for (int d = 0; d < kN; ++d) centroid[d] += pts[i][d] / kN;
    }
    auto along = [&](double t) {
      Params p;
      for (int d = 0; d < kN; ++d) {
        p[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
      }
      return p;
    };

    const Params reflected = along(-1.0);
    const double fr = f(reflected);
    if (fr < vals[best]) {
      const Params expanded = along(-2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[worst] = expanded;
        vals[worst] = fe;
      } else {
        pts[worst] = reflected;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = reflected;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Params contracted = along(outside ? -0.5 : 0.5);
    const double fc = f(contracted);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = fc;
      continue;
    }
    for (int i = 0; i <= kN; ++i) {
      if (i == best) continue;
      for (int d = 0; d < kN; ++d) {
        pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
      }
      vals[i] = f(pts[i]);
    }
  }
  const int best = static_cast<int>(
      std::min_element(vals.begin(), vals.end()) - vals.begin());
  return {pts[best], vals[best], converged};
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double LogisticFit::Predict(double x) const { return Logistic(beta, x); }

std::vector<double> LogisticFit::Predict(std::span<const double> x) const {
  std::vector<double> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = Predict(x[i]);
  return out;
}

LogisticFit FitLogistic(std::span<const double> metric_scores,
                        std::span<const double> dmos) {
  if (metric_scores.size() != dmos.size()) {
    throw Error(ErrorKind::kPrecondition, "logistic fit: length mismatch");
  }
  const size_t n = metric_scores.size();
  if (n < 5) {
    throw Error(ErrorKind::kPrecondition,
                "logistic fit needs at least 5 points, got " +
                    std::to_string(n));
  }
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(metric_scores[i]) || !std::isfinite(dmos[i])) {
      throw Error(ErrorKind::kPrecondition, "logistic fit: non-finite input");
    }
  }
  const auto [xmin_it, xmax_it] =
      std::minmax_element(metric_scores.begin(), metric_scores.end());
  const double x_spread = *xmax_it - *xmin_it;
  if (x_spread == 0.0) {
    throw Error(ErrorKind::kPrecondition,
                "logistic fit: metric scores are constant");
  }
  const auto [ymin_it, ymax_it] = std::minmax_element(dmos.begin(), dmos.end());
  const double y_lo = *ymin_it;
  const double y_hi = *ymax_it;

  const double x_mean =
      std::accumulate(metric_scores.begin(), metric_scores.end(), 0.0) / n;
  double x_var = 0.0;
  double xy_cov = 0.0;
  const double y_mean = std::accumulate(dmos.begin(), dmos.end(), 0.0) / n;
  for (size_t i = 0; i < n; ++i) {
    x_var += (metric_scores[i] - x_mean) * (metric_scores[i] - x_mean);
    xy_cov += (metric_scores[i] - x_mean) * (dmos[i] - y_mean);
  }
  const double x_std = std::sqrt(x_var / n);
  const double x_median =
      Median(std::vector<double>(metric_scores.begin(), metric_scores.end()));

  // b1 is the asymptote as the metric score grows; orient it with the trend.
  const bool increasing = xy_cov >= 0.0;
  const double up = increasing ? y_hi : y_lo;
  const double dn = increasing ? y_lo : y_hi;
  const std::array<Params, 5> starts = {{
      {up, dn, x_median, x_std},
      {up, dn, x_median, x_spread / 4},
      {up, dn, x_mean, x_spread / 10},
      {dn, up, x_median, x_std},
      {up, dn, x_median, x_spread},
  }};

  auto sse = [&](const Params& b) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double r = Logistic(b, metric_scores[i]) - dmos[i];
      s += r * r;
    }
    return std::isfinite(s) ? s : std::numeric_limits<double>::infinity();
  };

  const double y_step = std::max(1e-3, 0.1 * (y_hi - y_lo));
  LogisticFit best;
  best.sse = std::numeric_limits<double>::infinity();
  for (const Params& start : starts) {
    Params x = start;
    SimplexResult r{x, sse(x), false};
    // Restarting from the incumbent re-inflates a collapsed simplex.
    for (int round = 0; round < 4; ++round) {
      const Params step = {y_step, y_step, 0.1 * x_spread,
                           std::max(1e-6, 0.1 * std::abs(r.x[3]))};
      const SimplexResult next = NelderMead(sse, r.x, step, 4000);
      const bool improved = next.f < r.f;
      if (next.f <= r.f) r = next;
      if (!improved) break;
    }
    if (r.f < best.sse) {
      best.beta = r.x;
      best.sse = r.f;
      best.converged = r.converged;
    }
  }
  best.beta[3] = std::abs(best.beta[3]);
  return best;
}

}  // namespace bitdepth
