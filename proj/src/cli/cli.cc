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

#include "bitdepth/cli.h"

#include <ostream>

#include "CLI11.hpp"
#include "commands.h"

namespace bitdepth {
namespace {

void Fail(std::ostream& err, std::string_view klass, std::string_view msg) {
  err << "bitdepth: error: " << klass << ": " << msg << "\n";
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kPrecondition:
    case ErrorKind::kFormat:
    case ErrorKind::kLengthMismatch:
    case ErrorKind::kSampleRange:
    case ErrorKind::kNotFound:
      return kExitUsage;
    case ErrorKind::kIo:
    case ErrorKind::kState:
      return kExitProcessing;
  }
  return kExitProcessing;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Bit-depth adaptation, quality metrics and rating analysis",
               "bitdepth"};
  app.require_subcommand(1);

  cli::SynthOptions synth;
  CLI::App* c_synth = app.add_subcommand("synth", "Generate synthetic content");
  // "--h" is the height here, so help is long-form only.
  c_synth->set_help_flag("--help", "Print this help message and exit");
  c_synth->add_option("--kind", synth.kind,
                      "flat[:v], ramp, radial, noise, ramp_plus_noise, "
                      "moving_ramp");
  c_synth->add_option("--w,--width", synth.width)->check(CLI::PositiveNumber);
  c_synth->add_option("--h,--height", synth.height)->check(CLI::PositiveNumber);
  c_synth->add_option("--frames", synth.frames)->check(CLI::PositiveNumber);
  c_synth->add_option("--depth", synth.depth);
  c_synth->add_option("--seed", synth.seed);
  c_synth->add_option("--channels", synth.channels);
  c_synth->add_option("--fps", synth.fps);
  c_synth->add_option("--out", synth.out, "Raw sample file")->required();
  c_synth->add_option("--desc", synth.desc, "Descriptor (default <out>.json)");

  cli::AdaptOptions adapt;
  CLI::App* c_adapt = app.add_subcommand(
      "adapt", "Down-sample and reconstruct one sequence");
  c_adapt->add_option("--in", adapt.in)->required();
  c_adapt->add_option("--desc", adapt.desc);
  c_adapt->add_option("--depth", adapt.depth)->required();
  c_adapt->add_option("--method", adapt.method, "linear | error-diffusion");
  c_adapt->add_option("--matrix", adapt.matrix,
                      "sierra, floyd-steinberg, jarvis, sierra-lite");
  c_adapt->add_option("--up", adapt.up, "linear | gaussian");
  c_adapt->add_option("--sigma", adapt.sigma, "auto | <value>");
  c_adapt->add_flag("--sigma-per-frame", adapt.sigma_per_frame);
  c_adapt->add_option("--out-dir", adapt.out_dir)->required();

  cli::MetricsOptions metrics;
  CLI::App* c_metrics =
      app.add_subcommand("metrics", "Full-reference quality scores");
  c_metrics->add_option("--ref", metrics.ref)->required();
  c_metrics->add_option("--ref-desc", metrics.ref_desc);
  c_metrics->add_option("--test", metrics.test)->required();
  c_metrics->add_option("--test-desc", metrics.test_desc);
  c_metrics->add_option("--metric", metrics.metrics,
                        "psnr, ssim, ms_ssim, vif or all")
      ->delimiter(',');
  c_metrics->add_option("--sequence", metrics.sequence);
  c_metrics->add_option("--method,--label-method", metrics.method);
  c_metrics->add_option("--bit-depth", metrics.bit_depth);
  c_metrics->add_option("--color", metrics.color, "luma | channel-average");
  c_metrics->add_option("--out", metrics.out);

  cli::ExperimentOptions exp;
  CLI::App* c_exp = app.add_subcommand(
      "experiment", "Every input at every depth under every method");
  c_exp->add_option("--in", exp.inputs)->required();
  c_exp->add_option("--depths", exp.depths)->delimiter(',');
  c_exp->add_option("--methods", exp.methods)->delimiter(',');
  c_exp->add_option("--metric", exp.metrics)->delimiter(',');
  c_exp->add_option("--color", exp.color);
  c_exp->add_option("--out-dir", exp.out_dir)->required();

  cli::BenchOptions bench;
  CLI::App* c_bench = app.add_subcommand(
      "bench", "Correlate metric scores with subjective ratings");
  c_bench->add_option("--ratings", bench.ratings)->required();
  c_bench->add_option("--scores", bench.scores)->required();
  c_bench->add_option("--out", bench.out);
  c_bench->add_option("--out-kv", bench.out_kv);

  cli::MosOptions mos;
  CLI::App* c_mos = app.add_subcommand("mos", "Mean opinion scores");
  c_mos->add_option("--ratings", mos.ratings)->required();
  c_mos->add_option("--by", mos.by, "condition | method-depth");
  c_mos->add_option("--pooling", mos.pooling, "raw | sequence");
  c_mos->add_option("--out", mos.out);

  cli::RatingsOptions pref;
  CLI::App* c_pref =
      app.add_subcommand("preference", "Viewer preference per bit depth");
  c_pref->add_option("--ratings", pref.ratings)->required();
  c_pref->add_option("--out", pref.out);

  cli::RatingsOptions crit;
  CLI::App* c_crit = app.add_subcommand(
      "critical", "Lowest depth indistinguishable from the reference");
  c_crit->add_option("--ratings", crit.ratings)->required();
  c_crit->add_option("--out", crit.out);

  cli::PlanOptions plan;
  CLI::App* c_plan =
      app.add_subcommand("study-plan", "Write a full rating-study config");
  c_plan->add_option("--sequences", plan.sequences)
      ->delimiter(',')
      ->required();
  c_plan->add_option("--native-depth", plan.native_depth);
  c_plan->add_option("--depths", plan.depths)->delimiter(',');
  c_plan->add_option("--training", plan.training_items);
  c_plan->add_option("--grey-seconds", plan.grey_seconds);
  c_plan->add_option("--max-minutes", plan.max_minutes);
  c_plan->add_option("--out", plan.out);

  cli::ServeOptions serve;
  CLI::App* c_serve = app.add_subcommand("serve", "Run the rating service");
  c_serve->add_option("--config", serve.config)->required();
  c_serve->add_option("--log", serve.log, "Append-only record log")
      ->required();
  c_serve->add_option("--media", serve.media, "Static media root");
  c_serve->add_option("--host", serve.host);
  c_serve->add_option("--port", serve.port);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Fail(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (*c_synth) cli::CmdSynth(synth, out);
    if (*c_adapt) cli::CmdAdapt(adapt, out);
    if (*c_metrics) cli::CmdMetrics(metrics, out);
    if (*c_exp) cli::CmdExperiment(exp, out);
    if (*c_bench) cli::CmdBench(bench, out);
    if (*c_mos) cli::CmdMos(mos, out);
    if (*c_pref) cli::CmdPreference(pref, out);
    if (*c_crit) cli::CmdCritical(crit, out);
    if (*c_plan) cli::CmdStudyPlan(plan, out);
    if (*c_serve) cli::CmdServe(serve, out);
  } catch (const Error& e) {
    Fail(err, ErrorKindName(e.kind()), e.what());
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    Fail(err, "internal", e.what());
    return kExitProcessing;
  }
  return kExitOk;
}

}  // namespace bitdepth
