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

#include "bitdepth/bench_report.h"

#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"

namespace bitdepth {
namespace {

using ::bitdepth::testing::ThrownKind;

constexpr Method kMethods[] = {Method::kLinear, Method::kErrorDiffusion,
                               Method::kAdaptiveGaussian};
constexpr int kDepths[] = {8, 6, 4, 2};

// Ratings drawn from a monotone model: each condition has a latent
// impairment u in [0, 1]; viewers score 4.6 - 4 u plus noise.
struct Generated {
  std::vector<RatingRecord> ratings;
  std::vector<MetricRow> rows;
};

Generated Generate(uint64_t seed, bool with_references = true) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 0.05);
  Generated g;
  for (int s = 0; s < 4; ++s) {
    const std::string seq = "seq" + std::to_string(s);
    const auto rate = [&](Method m, int d, double u) {
      for (int p = 0; p < 12; ++p) {
        const double score =
            std::clamp(4.6 - 4.0 * u + noise(rng), kScoreMin, kScoreMax);
        g.ratings.push_back({"p" + std::to_string(p), seq, m, d, score});
      }
    };
    if (with_references) rate(Method::kReference, 10, 0.0);
    for (Method m : kMethods) {
      for (int d : kDepths) {
        const double u = uni(rng);
        rate(m, d, u);
        // One metric that grows with impairment, one that falls with it,
        // and one that ignores it. Two frames whose mean is the score.
        for (const char* frame : {"0", "1"}) {
          const double jitter = frame[0] == '0' ? 0.01 : -0.01;
          MetricRow row{{seq, m, d}, frame, {}};
          row.values["distortion"] = std::exp(3 * u) + jitter;
          row.values["quality"] = 1.0 - u * u + jitter;
          row.values["unrelated"] = uni(rng);
          g.rows.push_back(row);
        }
      }
    }
  }
  return g;
}

TEST(MetricScoresTest, ParsesCliLayoutAndMeanRow) {
  std::stringstream ss(
      "sequence,method,bit_depth,frame,psnr,vif\n"
      "a,linear,4,0,30,0.5\n"
      "a,linear,4,1,32,0.7\n"
      "a,linear,4,mean,31,0.6\n"
      "b,error_diffusion,2,0,20,0.2\n"
      "b,error_diffusion,2,1,22,0.4\n");
  const std::vector<MetricRow> rows = ReadMetricScores(ss);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[2].frame, kSequenceMeanFrame);
  const auto seq = SequenceMetricScores(rows);
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_DOUBLE_EQ(seq.at({"a", Method::kLinear, 4}).at("psnr"), 31.0);
  EXPECT_DOUBLE_EQ(seq.at({"b", Method::kErrorDiffusion, 2}).at("vif"), 0.3);
}

TEST(MetricScoresTest, RejectsSchemaViolations) {
  for (const std::string body :
       {"", "sequence,method,bit_depth,frame\n",
        "seq,method,bit_depth,frame,psnr\n",
        "sequence,method,bit_depth,frame,psnr\na,linear,4,0\n",
        "sequence,method,bit_depth,frame,psnr\na,blur,4,0,1\n",
        "sequence,method,bit_depth,frame,psnr\na,linear,four,0,1\n",
        "sequence,method,bit_depth,frame,psnr\na,linear,4,0,x\n"}) {
    std::stringstream ss(body);
    EXPECT_EQ(ThrownKind([&] { ReadMetricScores(ss); }), ErrorKind::kFormat)
        << body;
  }
  EXPECT_EQ(ThrownKind([] { ReadMetricScoresFile("/nonexistent.csv"); }),
            ErrorKind::kNotFound);
}

TEST(RunBenchTest, GenerativeModelIsRecovered) {
  const Generated g = Generate(17);
  const BenchReport report = RunBench(g.ratings, g.rows);
  ASSERT_EQ(report.entries.size(), 3u);
  std::map<std::string, BenchEntry> by;
  for (const BenchEntry& e : report.entries) by[e.metric] = e;
  EXPECT_EQ(by.at("distortion").n, 48u);
  EXPECT_GT(by.at("distortion").stats.srocc, 0.99);
  EXPECT_GT(by.at("distortion").stats.lcc, 0.99);
  EXPECT_LT(by.at("quality").stats.srocc, -0.99);
  EXPECT_LT(std::abs(by.at("unrelated").stats.srocc), 0.5);
  for (const BenchEntry& e : report.entries) {
    EXPECT_GE(e.stats.outlier_ratio, 0.0);
    EXPECT_LE(e.stats.outlier_ratio, 1.0);
    EXPECT_GE(e.stats.rmse, 0.0);
    EXPECT_LE(std::abs(e.stats.lcc), 1.0);
  }
  EXPECT_LE(by.at("distortion").stats.rmse, by.at("unrelated").stats.rmse);
}

TEST(RunBenchTest, ReportFormats) {
  const Generated g = Generate(3);
  const BenchReport report = RunBench(g.ratings, g.rows);
  const std::string table = FormatBenchTable(report);
  EXPECT_NE(table.find("SROCC"), std::string::npos);
  EXPECT_NE(table.find("distortion"), std::string::npos);
  int lines = 0;
  for (char c : table) lines += c == '\n';
  EXPECT_EQ(lines, 5);
  const std::string kv = FormatBenchKeyValue(report);
  std::istringstream in(kv);
  std::string line;
  std::map<std::string, std::string> values;
  while (std::getline(in, line)) {
    const size_t eq = line.find('=');
    ASSERT_NE(eq, std::string::npos) << line;
    values[line.substr(0, eq)] = line.substr(eq + 1);
  }
  EXPECT_EQ(values.at("distortion.n"), "48");
  EXPECT_DOUBLE_EQ(std::stod(values.at("quality.srocc")),
                   report.entries[1].stats.srocc);
  EXPECT_EQ(values.count("vif.srocc"), 0u);
  EXPECT_EQ(values.at("distortion.converged"), "true");
}

TEST(RunBenchTest, MissingReferencesIsAnError) {
  const Generated g = Generate(5, /*with_references=*/false);
  EXPECT_EQ(ThrownKind([&] { RunBench(g.ratings, g.rows); }),
            ErrorKind::kPrecondition);
}

TEST(RunBenchTest, TooFewMatchedConditions) {
  Generated g = Generate(5);
  // Keep metric rows for just two conditions of one sequence.
  std::vector<MetricRow> few(g.rows.begin(), g.rows.begin() + 4);
  EXPECT_EQ(ThrownKind([&] { RunBench(g.ratings, few); }),
            ErrorKind::kPrecondition);
}

}  // namespace
}  // namespace bitdepth
