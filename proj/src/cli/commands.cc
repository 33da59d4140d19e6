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

#include "commands.h"

#include <pthread.h>
#include <signal.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <thread>

#include "bitdepth/adaptation.h"
#include "bitdepth/analysis.h"
#include "bitdepth/bench_report.h"
#include "bitdepth/error.h"
#include "bitdepth/metrics.h"
#include "bitdepth/raw_io.h"
#include "bitdepth/study.h"
#include "bitdepth/study_server.h"
#include "bitdepth/synthetic.h"

namespace bitdepth::cli {
namespace fs = std::filesystem;
namespace {

VideoSequence LoadInput(const std::string& path, const std::string& desc) {
  const fs::path data(path);
  const fs::path d = desc.empty() ? DefaultDescriptorPath(data) : fs::path(desc);
  VideoSequence seq = LoadRawVideo(data, d);
  if (!seq.name().empty()) return seq;
  return VideoSequence(seq.frames(), seq.fps(), data.stem().string());
}

void WriteSequence(const VideoSequence& seq, const fs::path& data) {
  fs::path json = data;
  json.replace_extension(".json");
  WriteRawVideo(seq, data, json);
}

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  }
  return f;
}

// Runs `emit` against the file at `path`, or against `out` when empty.
template <typename F>
void Emit(const std::string& path, std::ostream& out, F emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream f = OpenOutput(path);
  emit(f);
  f.close();
  if (!f) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
}

void MakeDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::kIo,
                "cannot create '" + dir.string() + "': " + ec.message());
  }
}

std::vector<MetricId> ParseMetrics(const std::vector<std::string>& names) {
  std::vector<MetricId> ids;
  for (const std::string& n : names) {
    if (n == "all") return AllMetrics();
    const MetricId id = ParseMetricId(n);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  if (ids.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no metric requested");
  }
  return ids;
}

MetricOptions ParseColor(const std::string& color) {
  MetricOptions o;
  if (color == "luma") {
    o.color = ColorMode::kLuma;
  } else if (color == "channel-average" || color == "channel_average") {
    o.color = ColorMode::kChannelAverage;
  } else {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown colour mode '" + color +
                    "' (expected luma or channel-average)");
  }
  return o;
}

void WriteScoreHeader(std::ostream& out, const std::vector<MetricId>& ids) {
  out << kMetricKeyColumns;
  for (MetricId id : ids) out << "," << MetricName(id);
  out << "\n";
}

// Per-frame rows followed by the sequence mean row.
void WriteScoreRows(std::ostream& out, const Condition& c,
                    const VideoSequence& ref, const VideoSequence& test,
                    const std::vector<MetricId>& ids,
                    const MetricOptions& options) {
  if (ref.size() != test.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "frame count mismatch: reference has " +
                    std::to_string(ref.size()) + ", test has " +
                    std::to_string(test.size()));
  }
  std::vector<std::vector<MetricScore>> scores;
  for (MetricId id : ids) scores.push_back(FrameScores(ref, test, id, options));
  const std::string key = c.sequence + "," + std::string(MethodName(c.method)) +
                          "," + std::to_string(c.bit_depth) + ",";
  for (size_t t = 0; t < ref.size(); ++t) {
    out << key << t;
    for (const auto& s : scores) out << "," << FormatDouble(s[t].value);
    out << "\n";
  }
  out << key << kSequenceMeanFrame;
  for (const auto& s : scores) {
    double sum = 0.0;
    for (const MetricScore& m : s) sum += m.value;
    out << "," << FormatDouble(sum / s.size());
  }
  out << "\n";
}

AdaptationMethod MethodFor(Method m) {
  switch (m) {
    case Method::kLinear:
      return AdaptationMethod::Linear();
    case Method::kErrorDiffusion:
      return AdaptationMethod::ErrorDiffusion();
    case Method::kAdaptiveGaussian:
      return AdaptationMethod::AdaptiveGaussian();
    case Method::kReference:
      break;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "'reference' is not an adaptation method");
}

void CheckDepthBelow(int depth, const VideoSequence& seq) {
  const BitDepth target(depth);
  if (!(target < seq.depth())) {
    throw Error(ErrorKind::kPrecondition,
                "target depth " + std::to_string(depth) +
                    " must be below the source depth " +
                    std::to_string(seq.depth().bits()) + " of '" +
                    seq.name() + "'");
  }
}

std::string MseValue(double v) { return FormatDouble(v); }

}  // namespace

void CmdSynth(const SynthOptions& o, std::ostream& out) {
  if (o.out.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "--out is required");
  }
  const SyntheticSpec spec = SyntheticSpec::Parse(o.kind);
  const VideoSequence generated =
      GenerateSynthetic(spec, o.width, o.height, o.frames, BitDepth(o.depth),
                        o.seed, o.channels, o.fps);
  const fs::path data(o.out);
  const VideoSequence seq(generated.frames(), generated.fps(),
                          data.stem().string());
  const fs::path desc =
      o.desc.empty() ? DefaultDescriptorPath(data) : fs::path(o.desc);
  if (data.has_parent_path()) MakeDir(data.parent_path());
  WriteRawVideo(seq, data, desc);
  out << "data=" << data.string() << "\n"
      << "descriptor=" << desc.string() << "\n";
}

void CmdAdapt(const AdaptOptions& o, std::ostream& out) {
  if (o.out_dir.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "--out-dir is required");
  }
  const VideoSequence seq = LoadInput(o.in, o.desc);
  CheckDepthBelow(o.depth, seq);

  AdaptationMethod method;
  std::string down_token;
  if (o.method == "linear") {
    method.down = LinearDown{};
    down_token = "linear";
  } else if (o.method == "error-diffusion" || o.method == "error_diffusion") {
    const DiffusionMatrix m = BuiltinMatrix(o.matrix);
    down_token = m.name();
    method.down = ErrorDiffusionDown{m};
  } else {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown --method '" + o.method +
                    "' (expected linear or error-diffusion)");
  }
  std::string up_token;
  if (o.up == "linear") {
    method.up = LinearUp{};
    up_token = "linear";
  } else if (o.up == "gaussian") {
    GaussianUp g;
    if (o.sigma != "auto") {
      size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(o.sigma, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != o.sigma.size() || !(v > 0.0)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "--sigma must be 'auto' or a positive number, got '" +
                        o.sigma + "'");
      }
      g.sigma = v;
    }
    if (o.sigma_per_frame) {
      g.search.granularity = SigmaGranularity::kPerFrame;
    }
    method.up = g;
    up_token = "gaussian";
  } else {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown --up '" + o.up + "' (expected linear or gaussian)");
  }

  const RoundTripResult r = RoundTrip(seq, BitDepth(o.depth), method);
  const fs::path dir(o.out_dir);
  MakeDir(dir);
  const std::string stem = seq.name() + "_" + down_token + "-" + up_token +
                           "_" + std::to_string(o.depth) + "bpc";
  const fs::path down_path = dir / (stem + "_down.raw");
  const fs::path recon_path = dir / (stem + "_recon.raw");
  const fs::path mse_path = dir / (stem + "_mse.csv");
  WriteSequence(VideoSequence(r.down.frames(), seq.fps(), seq.name()),
                down_path);
  WriteSequence(VideoSequence(r.reconstructed.frames(), seq.fps(), seq.name()),
                recon_path);

  const double mean_mse =
      std::accumulate(r.frame_mse.begin(), r.frame_mse.end(), 0.0) /
      r.frame_mse.size();
  Emit(mse_path.string(), out, [&](std::ostream& f) {
    f << (r.sigma ? "frame,mse,sigma\n" : "frame,mse\n");
    for (size_t t = 0; t < r.frame_mse.size(); ++t) {
      f << t << "," << MseValue(r.frame_mse[t]);
      if (r.sigma) f << "," << FormatDouble(r.sigma->ForFrame(t));
      f << "\n";
    }
    f << "mean," << MseValue(mean_mse);
    if (r.sigma && r.sigma->sigma.size() == 1) {
      f << "," << FormatDouble(r.sigma->sigma.front());
    } else if (r.sigma) {
      f << ",";
    }
    f << "\n";
  });

  out << "sequence=" << seq.name() << "\n"
      << "method=" << method.Label() << "\n"
      << "depth=" << o.depth << "\n"
      << "down=" << down_path.string() << "\n"
      << "reconstructed=" << recon_path.string() << "\n"
      << "mse_report=" << mse_path.string() << "\n"
      << "mean_mse=" << MseValue(mean_mse) << "\n";
  if (r.sigma) {
    if (r.sigma->sigma.size() == 1) {
      out << "sigma=" << FormatDouble(r.sigma->sigma.front()) << "\n";
    } else {
      for (size_t t = 0; t < r.sigma->sigma.size(); ++t) {
        out << "sigma." << t << "=" << FormatDouble(r.sigma->sigma[t]) << "\n";
      }
    }
  }
}

void CmdMetrics(const MetricsOptions& o, std::ostream& out) {
  const std::vector<MetricId> ids = ParseMetrics(o.metrics);
  const MetricOptions options = ParseColor(o.color);
  const VideoSequence ref = LoadInput(o.ref, o.ref_desc);
  const VideoSequence test = LoadInput(o.test, o.test_desc);
  Condition c;
  c.sequence = o.sequence.empty() ? ref.name() : o.sequence;
  c.method = ParseMethod(o.method);
  c.bit_depth = o.bit_depth > 0 ? o.bit_depth : test.depth().bits();
  if (c.sequence.find(',') != std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "sequence label must not contain a comma");
  }
  Emit(o.out, out, [&](std::ostream& f) {
    WriteScoreHeader(f, ids);
    WriteScoreRows(f, c, ref, test, ids, options);
  });
}

void CmdExperiment(const ExperimentOptions& o, std::ostream& out) {
  if (o.inputs.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no input sequences");
  }
  if (o.methods.empty() || o.depths.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "experiment needs at least one method and one depth");
  }
  if (o.out_dir.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "--out-dir is required");
  }
  std::vector<Method> methods;
  for (const std::string& m : o.methods) {
    methods.push_back(ParseMethod(m));
    MethodFor(methods.back());
  }
  std::vector<MetricId> ids;
  if (!o.metrics.empty()) ids = ParseMetrics(o.metrics);
  const MetricOptions options = ParseColor(o.color);

  // Validate every input against every depth before any work starts.
  std::vector<VideoSequence> inputs;
  for (const std::string& path : o.inputs) {
    inputs.push_back(LoadInput(path, ""));
    for (int d : o.depths) CheckDepthBelow(d, inputs.back());
  }

  const fs::path dir(o.out_dir);
  MakeDir(dir);
  std::ofstream mse = OpenOutput(dir / "mse.csv");
  mse << "sequence,method,bit_depth,frame,mse\n";
  std::optional<std::ofstream> scores;
  if (!ids.empty()) {
    scores = OpenOutput(dir / "scores.csv");
    WriteScoreHeader(*scores, ids);
  }
  size_t conditions = 0;
  for (const VideoSequence& seq : inputs) {
    MakeDir(dir / seq.name());
    for (int d : o.depths) {
      for (Method m : methods) {
        const RoundTripResult r = RoundTrip(seq, BitDepth(d), MethodFor(m));
        const std::string stem =
            std::string(MethodName(m)) + "_" + std::to_string(d);
        WriteSequence(
            VideoSequence(r.reconstructed.frames(), seq.fps(), seq.name()),
            dir / seq.name() / (stem + ".raw"));
        const std::string key = seq.name() + "," +
                                std::string(MethodName(m)) + "," +
                                std::to_string(d) + ",";
        for (size_t t = 0; t < r.frame_mse.size(); ++t) {
          mse << key << t << "," << MseValue(r.frame_mse[t]) << "\n";
        }
        if (scores) {
          WriteScoreRows(*scores, {seq.name(), m, d}, seq, r.reconstructed,
                         ids, options);
        }
        if (r.sigma && r.sigma->sigma.size() == 1) {
          out << "sigma." << seq.name() << "." << d << "="
              << FormatDouble(r.sigma->sigma.front()) << "\n";
        }
        ++conditions;
      }
    }
  }
  out << "conditions=" << conditions << "\n"
      << "mse_report=" << (dir / "mse.csv").string() << "\n";
  if (scores) out << "scores=" << (dir / "scores.csv").string() << "\n";
}

void CmdBench(const BenchOptions& o, std::ostream& out) {
  const std::vector<RatingRecord> ratings = ReadRatingsFile(o.ratings);
  if (o.scores.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no metric score files given");
  }
  std::vector<MetricRow> rows;
  for (const std::string& path : o.scores) {
    std::vector<MetricRow> more = ReadMetricScoresFile(path);
    rows.insert(rows.end(), more.begin(), more.end());
  }
  const BenchReport report = RunBench(ratings, rows);
  Emit(o.out, out, [&](std::ostream& f) { f << FormatBenchTable(report); });
  if (!o.out_kv.empty()) {
    Emit(o.out_kv, out,
         [&](std::ostream& f) { f << FormatBenchKeyValue(report); });
  }
}

void CmdMos(const MosOptions& o, std::ostream& out) {
  const std::vector<RatingRecord> ratings = ReadRatingsFile(o.ratings);
  std::vector<MosEntry> mos;
  if (o.by == "condition") {
    mos = ComputeMos(ratings);
  } else if (o.by == "method-depth" || o.by == "method_depth") {
    MosPooling pooling;
    if (o.pooling == "raw") {
      pooling = MosPooling::kPoolRawScores;
    } else if (o.pooling == "sequence") {
      pooling = MosPooling::kAverageSequences;
    } else {
      throw Error(ErrorKind::kInvalidArgument,
                  "unknown --pooling '" + o.pooling +
                      "' (expected raw or sequence)");
    }
    mos = AggregateMos(ratings, pooling);
  } else {
    throw Error(ErrorKind::kInvalidArgument,
                "unknown --by '" + o.by +
                    "' (expected condition or method-depth)");
  }
  Emit(o.out, out, [&](std::ostream& f) {
    f << "sequence,method,bit_depth,n,mos,std_error,score_std\n";
    for (const MosEntry& e : mos) {
      f << e.condition.sequence << "," << MethodName(e.condition.method) << ","
        << e.condition.bit_depth << "," << e.n << "," << FormatDouble(e.mos)
        << "," << FormatDouble(e.std_error) << ","
        << FormatDouble(e.ScaledStd()) << "\n";
    }
  });
}

void CmdPreference(const RatingsOptions& o, std::ostream& out) {
  const PreferenceTable t = ViewerPreference(ReadRatingsFile(o.ratings));
  Emit(o.out, out, [&](std::ostream& f) {
    f << "bit_depth,method,percent,comparisons\n";
    for (const auto& [depth, by_method] : t.percent) {
      for (const auto& [m, pct] : by_method) {
        f << depth << "," << MethodName(m) << "," << FormatDouble(pct) << ","
          << t.comparisons.at(depth) << "\n";
      }
    }
  });
}

void CmdCritical(const RatingsOptions& o, std::ostream& out) {
  const std::vector<MosEntry> mos = ComputeMos(ReadRatingsFile(o.ratings));
  Emit(o.out, out, [&](std::ostream& f) {
    f << "method,critical_bit_depth\n";
    for (Method m : {Method::kLinear, Method::kErrorDiffusion,
                     Method::kAdaptiveGaussian}) {
      const bool present = std::any_of(mos.begin(), mos.end(), [&](auto& e) {
        return e.condition.method == m;
      });
      if (present) f << MethodName(m) << "," << CriticalBitDepth(mos, m) << "\n";
    }
  });
}

void CmdStudyPlan(const PlanOptions& o, std::ostream& out) {
  StudyConfig cfg = FullStudyPlan(o.sequences, o.native_depth, o.depths);
  cfg.training_items = o.training_items;
  cfg.grey_screen_seconds = o.grey_seconds;
  cfg.max_session_minutes = o.max_minutes;
  cfg.Validate();
  Emit(o.out, out, [&](std::ostream& f) { f << cfg.ToJson(); });
}

void CmdServe(const ServeOptions& o, std::ostream& out) {
  StudyService service(StudyConfig::FromFile(o.config), o.log);
  StudyServer server(service, o.media);

  // Route SIGINT/SIGTERM to a waiter thread that stops the server.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  const int port = server.Bind(o.host, o.port);
  out << "listening=http://" << o.host << ":" << port << std::endl;
  std::atomic<bool> signalled{false};
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    signalled = true;
    server.Stop();
  });
  server.Run();
  // Run() can also return on its own; release the waiter.
  if (!signalled) pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
}

}  // namespace bitdepth::cli
