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

#ifndef BITDEPTH_SRC_CLI_COMMANDS_H_
#define BITDEPTH_SRC_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bitdepth::cli {

struct SynthOptions {
  std::string kind = "ramp";
  int width = 256;
  int height = 256;
  int frames = 1;
  int depth = 10;
  uint64_t seed = 1;
  int channels = 3;
  double fps = 60.0;
  std::string out;
  std::string desc;  // default: <out stem>.json
};

struct AdaptOptions {
  std::string in;
  std::string desc;
  int depth = 0;
  std::string method = "error-diffusion";
  std::string matrix = "sierra";
  std::string up = "linear";
  std::string sigma = "auto";
  bool sigma_per_frame = false;
  std::string out_dir;
};

struct MetricsOptions {
  std::string ref;
  std::string ref_desc;
  std::string test;
  std::string test_desc;
  std::vector<std::string> metrics = {"all"};
  std::string sequence;  // default: reference sequence name
  std::string method = "reference";
  int bit_depth = 0;  // default: test sequence depth
  std::string color = "luma";
  std::string out;  // default: stdout
};

struct ExperimentOptions {
  std::vector<std::string> inputs;
  std::vector<int> depths = {8, 6, 4, 2};
  std::vector<std::string> methods = {"linear", "error_diffusion",
                                      "adaptive_gaussian"};
  std::vector<std::string> metrics;  // none: skip scoring
  std::string color = "luma";
  std::string out_dir;
};

struct BenchOptions {
  std::string ratings;
  std::vector<std::string> scores;
  std::string out;
  std::string out_kv;
};

struct MosOptions {
  std::string ratings;
  std::string by = "condition";
  std::string pooling = "raw";
  std::string out;
};

struct RatingsOptions {
  std::string ratings;
  std::string out;
};

struct PlanOptions {
  std::vector<std::string> sequences;
  int native_depth = 10;
  std::vector<int> depths = {8, 6, 4, 2};
  size_t training_items = 0;
  double grey_seconds = 3.0;
  double max_minutes = 30.0;
  std::string out;
};

struct ServeOptions {
  std::string config;
  std::string log;
  std::string media;
  std::string host = "127.0.0.1";
  int port = 8080;
};

// Each command throws bitdepth::Error on failure.
void CmdSynth(const SynthOptions& o, std::ostream& out);
void CmdAdapt(const AdaptOptions& o, std::ostream& out);
void CmdMetrics(const MetricsOptions& o, std::ostream& out);
void CmdExperiment(const ExperimentOptions& o, std::ostream& out);
void CmdBench(const BenchOptions& o, std::ostream& out);
void CmdMos(const MosOptions& o, std::ostream& out);
void CmdPreference(const RatingsOptions& o, std::ostream& out);
void CmdCritical(const RatingsOptions& o, std::ostream& out);
void CmdStudyPlan(const PlanOptions& o, std::ostream& out);
void CmdServe(const ServeOptions& o, std::ostream& out);

}  // namespace bitdepth::cli

#endif  // BITDEPTH_SRC_CLI_COMMANDS_H_
