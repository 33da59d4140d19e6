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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "bitdepth/error.h"

namespace bitdepth {
namespace {

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) {
      field.pop_back();
    }
    out.push_back(field);
  }
  return out;
}

Error RowError(size_t line, const std::string& what) {
  return Error(ErrorKind::kFormat,
               "metric scores line " + std::to_string(line) + ": " + what);
}

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::vector<MetricRow> ReadMetricScores(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw RowError(1, "missing header");
  const std::vector<std::string> header = Split(line);
  const std::vector<std::string> keys = Split(std::string(kMetricKeyColumns));
  if (header.size() <= keys.size() ||
      !std::equal(keys.begin(), keys.end(), header.begin())) {
    throw RowError(1, "header must start with '" +
                          std::string(kMetricKeyColumns) +
                          "' followed by metric columns");
  }
  std::vector<MetricRow> rows;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> f = Split(line);
    if (f.size() != header.size()) {
      throw RowError(line_no, "expected " + std::to_string(header.size()) +
                                  " fields");
    }
    MetricRow row;
    row.condition.sequence = f[0];
    try {
      row.condition.method = ParseMethod(f[1]);
    } catch (const Error& e) {
      throw RowError(line_no, e.what());
    }
    const auto [dp, dec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(),
                                           row.condition.bit_depth);
    if (dec != std::errc() || dp != f[2].data() + f[2].size()) {
      throw RowError(line_no, "bad bit_depth '" + f[2] + "'");
    }
    row.frame = f[3];
    for (size_t c = keys.size(); c < header.size(); ++c) {
      double v = 0.0;
      const auto [p, ec] =
          std::from_chars(f[c].data(), f[c].data() + f[c].size(), v);
      if (ec != std::errc() || p != f[c].data() + f[c].size()) {
        throw RowError(line_no, "bad value '" + f[c] + "' for " + header[c]);
      }
      row.values[header[c]] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MetricRow> ReadMetricScoresFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kNotFound,
                "cannot open metric scores '" + path + "'");
  }
  return ReadMetricScores(in);
}

std::map<Condition, std::map<std::string, double>> SequenceMetricScores(
    std::span<const MetricRow> rows) {
  std::map<Condition, std::map<std::string, double>> means;
  std::map<Condition, std::map<std::string, std::pair<double, size_t>>> sums;
  for (const MetricRow& r : rows) {
    for (const auto& [metric, v] : r.values) {
      if (r.frame == kSequenceMeanFrame) {
        means[r.condition][metric] = v;
      } else {
        auto& acc = sums[r.condition][metric];
        acc.first += v;
        ++acc.second;
      }
    }
  }
  for (const auto& [cond, metrics] : sums) {
    for (const auto& [metric, acc] : metrics) {
      means[cond].try_emplace(metric, acc.first / acc.second);
    }
  }
  return means;
}

BenchReport RunBench(std::span<const RatingRecord> ratings,
                     std::span<const MetricRow> metric_rows) {
  const std::vector<MosEntry> mos = ComputeMos(ratings);
  const std::vector<DmosEntry> dmos = ComputeDmos(mos);
  const auto scores = SequenceMetricScores(metric_rows);

  std::vector<std::string> metrics;
  for (const auto& [cond, by_metric] : scores) {
    for (const auto& [m, v] : by_metric) {
      if (std::find(metrics.begin(), metrics.end(), m) == metrics.end()) {
        metrics.push_back(m);
      }
    }
  }

  BenchReport report;
  for (const std::string& metric : metrics) {
    std::vector<double> x, y, sd;
    for (const DmosEntry& d : dmos) {
      const auto it = scores.find(d.condition);
      if (it == scores.end()) continue;
      const auto mit = it->second.find(metric);
      if (mit == it->second.end()) continue;
      x.push_back(mit->second);
      y.push_back(d.dmos);
      sd.push_back(d.score_std);
    }
    if (x.size() < 5) {
      throw Error(ErrorKind::kPrecondition,
                  "metric '" + metric + "' matches only " +
                      std::to_string(x.size()) +
                      " rated conditions, need >= 5");
    }
    BenchEntry e;
    e.metric = metric;
    e.n = x.size();
    e.fit = FitLogistic(x, y);
    const std::vector<double> fitted = e.fit.Predict(x);
    e.stats = ComputeCorrelationStats(x, fitted, y, sd);
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string FormatBenchTable(const BenchReport& report) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-6s", "");
  out << buf;
  for (const BenchEntry& e : report.entries) {
    std::snprintf(buf, sizeof(buf), " | %9s", e.metric.c_str());
    out << buf;
  }
  out << "\n";
  const auto row = [&](const char* name, auto get, int decimals) {
    std::snprintf(buf, sizeof(buf), "%-6s", name);
    out << buf;
    for (const BenchEntry& e : report.entries) {
      std::snprintf(buf, sizeof(buf), " | %9s", Fixed(get(e), decimals).c_str());
      out << buf;
    }
    out << "\n";
  };
  row("SROCC", [](const BenchEntry& e) { return e.stats.srocc; }, 3);
  row("LCC", [](const BenchEntry& e) { return e.stats.lcc; }, 3);
  row("OR", [](const BenchEntry& e) { return e.stats.outlier_ratio; }, 3);
  row("RMSE", [](const BenchEntry& e) { return e.stats.rmse; }, 3);
  return out.str();
}

std::string FormatBenchKeyValue(const BenchReport& report) {
  std::ostringstream out;
  for (const BenchEntry& e : report.entries) {
    const std::string& m = e.metric;
    out << m << ".n=" << e.n << "\n";
    out << m << ".srocc=" << FormatDouble(e.stats.srocc) << "\n";
    out << m << ".lcc=" << FormatDouble(e.stats.lcc) << "\n";
    out << m << ".or=" << FormatDouble(e.stats.outlier_ratio) << "\n";
    out << m << ".rmse=" << FormatDouble(e.stats.rmse) << "\n";
    for (int i = 0; i < 4; ++i) {
      out << m << ".beta" << (i + 1) << "=" << FormatDouble(e.fit.beta[i])
          << "\n";
    }
    out << m << ".sse=" << FormatDouble(e.fit.sse) << "\n";
    out << m << ".converged=" << (e.fit.converged ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace bitdepth
