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

// Acceptance suite: one PASS/FAIL line per criterion. Every tolerance used
// below is pinned here. Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bitdepth/adaptation.h"
#include "bitdepth/analysis.h"
#include "bitdepth/bench_report.h"
#include "bitdepth/diffusion.h"
#include "bitdepth/gaussian.h"
#include "bitdepth/metrics.h"
#include "bitdepth/raw_io.h"
#include "bitdepth/rescale.h"
#include "bitdepth/study.h"
#include "bitdepth/synthetic.h"
#include "httplib.h"
#include "json.hpp"
#include "serve_process.h"
#include "test_util.h"

namespace bitdepth {
namespace {

using ::bitdepth::testing::ServeProcess;
using ::bitdepth::testing::TempDir;

// Pinned tolerances.
constexpr double kLinearSuiteSeconds = 1.0;
constexpr double kMeanPreservationCodes = 1.0;
constexpr double kKernelSumTolerance = 1e-12;
constexpr double kSigmaTolerance = 0.02;
constexpr double kMseSlack = 1e-9;
constexpr double kIdentityTolerance = 1e-12;
// VIF's 1e-10 variance floor leaves a residue of order 1e-11.
constexpr double kVifIdentityTolerance = 1e-9;
constexpr int kSigmaFrameSize = 256;
constexpr double kFixtureTolerance = 1e-3;
constexpr double kMosTolerance = 1e-12;
constexpr double kCorrelationTolerance = 1e-12;
constexpr double kRefitSse = 1e-6;
constexpr double kPercentTolerance = 1e-9;
constexpr double kFullScaleCorrTolerance = 0.03;
constexpr double kFullScaleRmseTolerance = 1.5;

enum class Outcome { kPass, kFail, kSkip };

struct Result {
  Outcome outcome;
  std::string detail;
};

Result Pass(std::string d) { return {Outcome::kPass, std::move(d)}; }
Result Fail(std::string d) { return {Outcome::kFail, std::move(d)}; }
Result Check(bool ok, std::string d) {
  return {ok ? Outcome::kPass : Outcome::kFail, std::move(d)};
}

std::string Num(double v, int decimals = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

double SequenceMse(const VideoSequence& a, const VideoSequence& b) {
  double s = 0.0;
  for (size_t t = 0; t < a.size(); ++t) s += FrameMse(a.frame(t), b.frame(t));
  return s / a.size();
}

double PlaneMean(std::span<const uint16_t> p) {
  return std::accumulate(p.begin(), p.end(), 0.0) / p.size();
}

// ---------------------------------------------------------------------------

Result LinearScalingSuite() {
  const auto start = std::chrono::steady_clock::now();
  for (int a = 1; a <= 12; ++a) {
    const uint32_t max_a = BitDepth(a).max_value();
    Plane all(max_a + 1);
    std::iota(all.begin(), all.end(), 0);
    const PlanarFrame in(static_cast<int>(max_a + 1), 1, BitDepth(a), "Y",
                         {all});
    for (int b = 1; b <= 12; ++b) {
      const PlanarFrame out = LinearRescale(in, BitDepth(b));
      const auto p = out.plane(0);
      if (p.front() != 0 || p.back() != BitDepth(b).max_value()) {
        return Fail("endpoint broken for " + std::to_string(a) + "->" +
                    std::to_string(b));
      }
      if (!std::is_sorted(p.begin(), p.end())) {
        return Fail("not monotone for " + std::to_string(a) + "->" +
                    std::to_string(b));
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return Check(secs < kLinearSuiteSeconds,
               "144 depth pairs exhaustive in " + Num(secs, 3) + " s");
}

Result SierraMatrix() {
  const DiffusionMatrix s = BuiltinMatrix("sierra");
  const std::vector<std::vector<int>> expected = {
      {0, 0, 0, 5, 3}, {2, 4, 5, 4, 2}, {0, 2, 3, 2, 0}};
  if (s.numerators() != expected || s.denominator() != 32 ||
      s.anchor_row() != 0 || s.anchor_col() != 2) {
    return Fail("sierra weights differ from {5,3 | 2,4,5,4,2 | 2,3,2}/32");
  }
  for (const std::string& name : BuiltinMatrixNames()) {
    const DiffusionMatrix m = BuiltinMatrix(name);
    if (m.NumeratorSum() != m.denominator()) {
      return Fail(name + " weights do not sum to 1");
    }
  }
  return Pass("sierra exact over 32; " +
              std::to_string(BuiltinMatrixNames().size()) +
              " built-in matrices sum to 1");
}

Result ErrorDiffusionOracles() {
  const PlanarFrame trace(3, 1, BitDepth(8), "Y", {Plane{128, 128, 128}});
  const PlanarFrame out =
      ErrorDiffuseDownsample(trace, BitDepth(1), BuiltinMatrix("sierra"));
  const Plane expected = {1, 0, 1};
  if (!std::equal(expected.begin(), expected.end(), out.plane(0).begin())) {
    return Fail("1x3 [128,128,128] 8->1 bit trace is not [1,0,1]");
  }
  double worst = 0.0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const PlanarFrame in = GenerateSynthetic(SyntheticSpec::Parse("noise"), 256,
                                             256, 1, BitDepth(10), seed, 1)
                               .frame(0);
    const PlanarFrame up = LinearRescale(
        ErrorDiffuseDownsample(in, BitDepth(2), BuiltinMatrix("sierra")),
        BitDepth(10));
    worst = std::max(worst,
                     std::abs(PlaneMean(up.plane(0)) - PlaneMean(in.plane(0))));
  }
  return Check(worst <= kMeanPreservationCodes,
               "trace [1,0,1]; worst mean shift over 20 seeds " + Num(worst) +
                   " codes (limit " + Num(kMeanPreservationCodes, 1) + ")");
}

Result GaussianKernelChecks() {
  const std::pair<double, int> sizes[] = {
      {0.5, 3}, {1.0, 5}, {1.7, 9}, {3.0, 13}};
  double worst_sum = 0.0;
  for (const auto& [sigma, n] : sizes) {
    const GaussianKernel k(sigma);
    if (k.size() != n) {
      return Fail("sigma " + Num(sigma, 1) + " gives N=" +
                  std::to_string(k.size()) + ", want " + std::to_string(n));
    }
    const std::vector<double> w = k.Weights2D();
    worst_sum = std::max(
        worst_sum, std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0));
    for (uint16_t v : {0, 1, 2, 3}) {
      const PlanarFrame flat =
          PlanarFrame::Filled(33, 21, BitDepth(2), "RGB", v);
      const PlanarFrame up = GaussianUpsample(flat, BitDepth(10), sigma);
      const uint16_t want = static_cast<uint16_t>(v * 341);
      if (up != PlanarFrame::Filled(33, 21, BitDepth(10), "RGB", want)) {
        return Fail("flat field not preserved at sigma " + Num(sigma, 1));
      }
    }
  }
  return Check(worst_sum <= kKernelSumTolerance,
               "N = 2*ceil(2*sigma)+1 for {0.5,1,1.7,3}; max |sum-1| " +
                   Num(worst_sum, 17) + "; flat fields exact");
}

Result SigmaOptimization() {
  const SigmaSearchConfig config;
  const int fine_cells = 10 * config.grid_cells;
  double worst_dsigma = 0.0;
  std::string detail;
  bool ok = true;
  for (const char* kind : {"ramp_plus_noise", "radial", "noise"}) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      const VideoSequence ref =
          GenerateSynthetic(SyntheticSpec::Parse(kind), kSigmaFrameSize,
                            kSigmaFrameSize, 1, BitDepth(10), seed, 1);
      const VideoSequence low =
          ErrorDiffuseDownsample(ref, BitDepth(2), BuiltinMatrix("sierra"));
      const SigmaEstimate est = OptimizeSigma(low, ref, config);
      double best_sigma = 0.0;
      double best_mse = INFINITY;
      for (int i = 0; i <= fine_cells; ++i) {
        const double s = config.sigma_lo +
                         i * (config.sigma_hi - config.sigma_lo) / fine_cells;
        const double mse =
            SequenceMse(GaussianUpsample(low, BitDepth(10), s), ref);
        if (mse < best_mse) {
          best_mse = mse;
          best_sigma = s;
        }
      }
      const double linear_mse =
          SequenceMse(LinearRescale(low, BitDepth(10)), ref);
      const double dsigma = std::abs(est.sigma[0] - best_sigma);
      ok = ok && dsigma <= kSigmaTolerance &&
           est.mse[0] <= linear_mse + kMseSlack;
      worst_dsigma = std::max(worst_dsigma, dsigma);
      if (seed == 1) {
        detail += std::string(kind) + " sigma " + Num(est.sigma[0], 3) +
                  " (grid " + Num(best_sigma, 3) + ", mse " +
                  Num(est.mse[0], 1) + " vs linear " + Num(linear_mse, 1) +
                  "); ";
      }
    }
  }
  return Check(ok, detail + "worst |dsigma| over 3 seeds each " +
                       Num(worst_dsigma) + " (limit " +
                       Num(kSigmaTolerance, 2) + ")");
}

Result OrderingReproduction() {
  const VideoSequence ref = GenerateSynthetic(
      SyntheticSpec::Parse("ramp_plus_noise"), 256, 256, 1, BitDepth(10), 1, 3);
  const auto psnr = [&](int depth, const AdaptationMethod& m) {
    return SequenceScore(ref, RoundTrip(ref, BitDepth(depth), m).reconstructed,
                         MetricId::kPsnr)
        .value;
  };
  const double lin4 = psnr(4, AdaptationMethod::Linear());
  const double ed4 = psnr(4, AdaptationMethod::ErrorDiffusion());
  const double ed2 = psnr(2, AdaptationMethod::ErrorDiffusion());
  const double gau2 = psnr(2, AdaptationMethod::AdaptiveGaussian());
  return Check(lin4 > ed4 && gau2 > ed2,
               "PSNR linear@4 " + Num(lin4, 2) + " > sierra@4 " + Num(ed4, 2) +
                   "; sierra+gaussian@2 " + Num(gau2, 2) +
                   " > sierra+linear@2 " + Num(ed2, 2) + " dB");
}

PlanarFrame AddNoise(const PlanarFrame& f, double sd, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, sd);
  const double max = f.depth().max_value();
  std::vector<Plane> planes;
  for (int c = 0; c < f.channels(); ++c) {
    Plane p(f.plane(c).begin(), f.plane(c).end());
    for (auto& v : p) {
      v = static_cast<uint16_t>(std::clamp(std::round(v + n(rng)), 0.0, max));
    }
    planes.push_back(std::move(p));
  }
  return PlanarFrame(f.width(), f.height(), f.depth(), f.channel_order(),
                     std::move(planes));
}

Result MetricChecks() {
  const PlanarFrame f =
      GenerateSynthetic(SyntheticSpec::Parse("ramp_plus_noise"), 192, 192, 1,
                        BitDepth(10), 5, 3)
          .frame(0);
  if (Psnr(f, f).value != kPsnrCap) return Fail("PSNR identity is not the cap");
  for (MetricId id : {MetricId::kSsim, MetricId::kMsSsim, MetricId::kVif}) {
    const double tol =
        id == MetricId::kVif ? kVifIdentityTolerance : kIdentityTolerance;
    if (std::abs(FrameScore(id, f, f).value - 1.0) > tol) {
      return Fail(std::string(MetricName(id)) + " identity is not 1");
    }
  }
  for (MetricId id : AllMetrics()) {
    double prev = INFINITY;
    for (double sd : {4.0, 16.0, 64.0}) {
      const double v = FrameScore(id, f, AddNoise(f, sd, 1)).value;
      if (!(v < prev)) {
        return Fail(std::string(MetricName(id)) + " not monotone in noise");
      }
      prev = v;
    }
  }

  const std::string dir = std::string(BITDEPTH_FIXTURE_DIR) + "/metrics/";
  std::ifstream in(dir + "expected.csv");
  if (!in) return Fail("fixture corpus missing at " + dir);
  std::string line;
  std::getline(in, line);
  double worst = 0.0;
  int cases = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string name, field;
    std::getline(ss, name, ',');
    const VideoSequence ref =
        LoadRawVideo(dir + name + "_ref.raw", dir + name + "_ref.json");
    const VideoSequence test =
        LoadRawVideo(dir + name + "_test.raw", dir + name + "_test.json");
    for (MetricId id : AllMetrics()) {
      std::getline(ss, field, ',');
      worst = std::max(worst, std::abs(SequenceScore(ref, test, id).value -
                                       std::stod(field)));
    }
    ++cases;
  }
  return Check(cases == 5 && worst <= kFixtureTolerance,
               "identity values hold; monotone over 3 noise levels; " +
                   std::to_string(cases) + " fixture pairs, max deviation " +
                   Num(worst, 9));
}

// Brute-force Pearson for the analysis oracle.
double DirectPearson(const std::vector<double>& a,
                     const std::vector<double>& b) {
  const double n = a.size();
  double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    saa += a[i] * a[i];
    sbb += b[i] * b[i];
    sab += a[i] * b[i];
  }
  return (n * sab - sa * sb) /
         std::sqrt((n * saa - sa * sa) * (n * sbb - sb * sb));
}

std::vector<double> DirectRanks(const std::vector<double>& v) {
  std::vector<double> r;
  for (double x : v) {
    double less = 0, equal = 0;
    for (double y : v) {
      less += y < x;
      equal += y == x;
    }
    r.push_back(1 + less + (equal - 1) / 2);
  }
  return r;
}

Result AnalysisOracles() {
  // MOS and standard error by hand: scores {5,4,3} -> mean 4 -> MOS 80,
  // sample std 1 -> std error 20 / sqrt(3).
  const std::vector<RatingRecord> recs = {
      {"a", "s", Method::kReference, 10, 5},
      {"b", "s", Method::kReference, 10, 4},
      {"c", "s", Method::kReference, 10, 3}};
  const MosEntry m = ComputeMos(recs).at(0);
  if (std::abs(m.mos - 80.0) > kMosTolerance ||
      std::abs(m.std_error - 20.0 / std::sqrt(3.0)) > kMosTolerance) {
    return Fail("MOS/std error differ from hand arithmetic");
  }

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coarse(0, 5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = 3 + trial % 6;  // 3..8
    std::vector<double> a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      a[i] = coarse(rng) + 0.1 * i;
      b[i] = coarse(rng);
    }
    if (std::adjacent_find(b.begin(), b.end(), std::not_equal_to<>()) ==
        b.end()) {
      continue;
    }
    worst = std::max(worst,
                     std::abs(PearsonCorrelation(a, b) - DirectPearson(a, b)));
    worst = std::max(worst,
                     std::abs(SpearmanCorrelation(a, b) -
                              DirectPearson(DirectRanks(a), DirectRanks(b))));
  }
  if (worst > kCorrelationTolerance) {
    return Fail("correlation deviates from direct formulas by " +
                Num(worst, 15));
  }

  const std::vector<double> x = {0.2, 0.9, 1.4, 2.2, 3.1, 3.3};
  const std::vector<double> y = {7, 1, 4, 2, 9, 5};
  std::vector<double> cubed;
  for (double v : x) cubed.push_back(v * v * v);
  if (SpearmanCorrelation(x, y) != SpearmanCorrelation(cubed, y)) {
    return Fail("SROCC changes under x -> x^3");
  }

  const LogisticFit truth{{85.0, 10.0, 0.55, 0.07}};
  std::vector<double> lx, ly;
  for (int i = 0; i < 20; ++i) {
    lx.push_back(0.3 + 0.025 * i);
    ly.push_back(truth.Predict(lx.back()));
  }
  const LogisticFit fit = FitLogistic(lx, ly);
  if (!(fit.sse < kRefitSse)) {
    return Fail("logistic refit SSE " + Num(fit.sse, 9));
  }

  std::vector<RatingRecord> prefs;
  std::mt19937_64 prng(9);
  std::uniform_int_distribution<int> score(0, 5);
  for (int p = 0; p < 7; ++p) {
    for (int d : {8, 6, 4, 2}) {
      for (Method method : {Method::kLinear, Method::kErrorDiffusion,
                            Method::kAdaptiveGaussian}) {
        prefs.push_back({"p" + std::to_string(p), "s", method, d,
                         static_cast<double>(score(prng))});
      }
    }
  }
  double worst_total = 0.0;
  for (const auto& [depth, by_method] : ViewerPreference(prefs).percent) {
    double total = 0.0;
    for (const auto& [method, pct] : by_method) total += pct;
    worst_total = std::max(worst_total, std::abs(total - 100.0));
  }
  return Check(worst_total <= kPercentTolerance,
               "MOS/stderr exact; correlations within " +
                   Num(kCorrelationTolerance, 12) +
                   " on n<=8; x^3 invariant; "
                   "refit SSE " +
                   Num(fit.sse, 12) + "; preference totals 100");
}

MosEntry Entry(const std::string& seq, Method m, int d, double mos, double se) {
  MosEntry e;
  e.condition = {seq, m, d};
  e.mos = mos;
  e.std_error = se;
  e.n = 14;
  return e;
}

Result CriticalDepth() {
  // Three sequences; 8 and 6 bpc overlap the reference, 4 and 2 bpc are
  // disjoint from it.
  std::vector<MosEntry> mos;
  const double ref[] = {82.0, 75.0, 88.0};
  for (int s = 0; s < 3; ++s) {
    const std::string seq = "seq" + std::to_string(s);
    mos.push_back(Entry(seq, Method::kReference, 10, ref[s], 3.0));
    mos.push_back(Entry(seq, Method::kErrorDiffusion, 8, ref[s] - 1.0, 3.0));
    mos.push_back(Entry(seq, Method::kErrorDiffusion, 6, ref[s] - 4.5, 3.0));
    mos.push_back(Entry(seq, Method::kErrorDiffusion, 4, ref[s] - 20.0, 3.5));
    mos.push_back(Entry(seq, Method::kErrorDiffusion, 2, ref[s] - 45.0, 4.0));
  }
  const int critical = CriticalBitDepth(mos, Method::kErrorDiffusion);
  return Check(critical == 6,
               "critical bit depth " + std::to_string(critical) + " (want 6)");
}

// Optional: needs external subjective ratings and matching VIF scores.
Result FullScaleVif() {
  const char* ratings = std::getenv("BITDEPTH_FULLSCALE_RATINGS");
  const char* scores = std::getenv("BITDEPTH_FULLSCALE_SCORES");
  if (!ratings || !scores) {
    return {Outcome::kSkip,
            "optional; set BITDEPTH_FULLSCALE_RATINGS and "
            "BITDEPTH_FULLSCALE_SCORES to run"};
  }
  const BenchReport report =
      RunBench(ReadRatingsFile(ratings), ReadMetricScoresFile(scores));
  for (const BenchEntry& e : report.entries) {
    if (e.metric != "vif") continue;
    const CorrelationStats& s = e.stats;
    const bool ok =
        std::abs(std::abs(s.srocc) - 0.830) <= kFullScaleCorrTolerance &&
        std::abs(std::abs(s.lcc) - 0.910) <= kFullScaleCorrTolerance &&
        std::abs(s.outlier_ratio - 0.264) <= kFullScaleCorrTolerance &&
        std::abs(s.rmse - 13.047) <= kFullScaleRmseTolerance;
    return Check(ok, "vif |SROCC| " + Num(std::abs(s.srocc), 3) + " |LCC| " +
                         Num(std::abs(s.lcc), 3) + " OR " +
                         Num(s.outlier_ratio, 3) + " RMSE " + Num(s.rmse, 3));
  }
  return Fail("no vif column in " + std::string(scores));
}

Result StudyDurability() {
  using json = nlohmann::json;
  const std::string seqs[] = {"a", "b"};
  StudyConfig plan = FullStudyPlan(seqs, 10);  // 26 conditions
  plan.training_items = 2;

  for (uint64_t seed = 0; seed < 100; ++seed) {
    const std::vector<PlaylistItem> p = BuildPlaylist(plan, seed);
    std::vector<size_t> main;
    for (const PlaylistItem& item : p) {
      if (!item.training) main.push_back(item.condition_index);
    }
    std::sort(main.begin(), main.end());
    for (size_t i = 0; i < main.size(); ++i) {
      if (main[i] != i || main.size() != plan.conditions.size()) {
        return Fail("seed " + std::to_string(seed) +
                    " playlist is not a permutation");
      }
    }
  }

  TempDir dir;
  const std::string config = dir / "study.json";
  std::ofstream(config) << plan.ToJson();
  const std::vector<std::string> args = {"--config", config, "--log",
                                         dir / "log.jsonl"};
  // Three complete sessions, then a fourth killed mid-way.
  constexpr int kSessions = 4;
  constexpr int kPartialItems = 9;
  size_t acked_main = 0;
  const size_t total = plan.conditions.size() + plan.training_items;
  {
    ServeProcess proc(BITDEPTH_CLI_PATH, args);
    httplib::Client client("127.0.0.1", proc.port());
    for (int s = 0; s < kSessions; ++s) {
      auto r = client.Post(
          "/sessions", json{{"participant_id", "p" + std::to_string(s)}}.dump(),
          "application/json");
      if (!r || r->status != 201) return Fail("session creation failed");
      const std::string id = json::parse(r->body)["session_id"];
      const size_t items = s + 1 < kSessions ? total : kPartialItems;
      for (size_t i = 0; i < items; ++i) {
        r = client.Post(("/sessions/" + id + "/ratings").c_str(),
                        json{{"item_id", i}, {"score", (i * 7 + s) % 6}}.dump(),
                        "application/json");
        if (!r || r->status != 200) return Fail("rating not acknowledged");
        if (i >= plan.training_items) ++acked_main;
      }
    }
    proc.Kill();
  }
  ServeProcess proc(BITDEPTH_CLI_PATH, args);
  httplib::Client client("127.0.0.1", proc.port());
  auto r = client.Get("/export");
  if (!r || r->status != 200) return Fail("export after restart failed");
  std::istringstream in(r->body);
  const std::vector<RatingRecord> exported = ReadRatings(in);
  const std::vector<MosEntry> mos = ComputeMos(exported);
  proc.Terminate();
  return Check(exported.size() == acked_main,
               "100 seeded playlists are permutations; " +
                   std::to_string(exported.size()) + " of " +
                   std::to_string(acked_main) +
                   " acked ratings survive SIGKILL; export gives " +
                   std::to_string(mos.size()) + " MOS rows");
}

}  // namespace
}  // namespace bitdepth

int main() {
  using bitdepth::Outcome;
  using bitdepth::Result;
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"linear-scaling-exhaustive", bitdepth::LinearScalingSuite},
      {"sierra-matrix", bitdepth::SierraMatrix},
      {"error-diffusion-trace-and-mean", bitdepth::ErrorDiffusionOracles},
      {"gaussian-kernel", bitdepth::GaussianKernelChecks},
      {"sigma-optimization", bitdepth::SigmaOptimization},
      {"psnr-ordering", bitdepth::OrderingReproduction},
      {"metric-identity-fixtures-monotonicity", bitdepth::MetricChecks},
      {"analysis-oracles", bitdepth::AnalysisOracles},
      {"critical-bit-depth", bitdepth::CriticalDepth},
      {"full-scale-vif-benchmark", bitdepth::FullScaleVif},
      {"study-service-durability", bitdepth::StudyDurability},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = bitdepth::Fail(std::string("exception: ") + e.what());
    }
    const char* tag = r.outcome == Outcome::kPass   ? "PASS"
                      : r.outcome == Outcome::kFail ? "FAIL"
                                                    : "SKIPPED";
    if (r.outcome == Outcome::kFail) ++failures;
    std::printf("%s %s: %s\n", tag, name, r.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
