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

#include "bitdepth/adaptation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "bitdepth/error.h"
#include "bitdepth/kernels.h"

namespace bitdepth {

void SigmaSearchConfig::Validate() const {
  if (!(sigma_lo > 0.0) || !(sigma_hi >= sigma_lo) ||
      !std::isfinite(sigma_hi)) {
    throw Error(ErrorKind::kInvalidArgument,
                "sigma search range must satisfy 0 < lo <= hi");
  }
  if (grid_cells < 1 || !(tolerance > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "sigma search needs >= 1 grid cell and a positive tolerance");
  }
}

ScalarMinimum GridThenGoldenMinimize(const std::function<double(double)>& f,
                                     double lo, double hi, int cells,
                                     double tolerance) {
  ScalarMinimum best{lo, f(lo)};
  auto consider = [&best](double x, double v) {
    if (v < best.value || (v == best.value && x < best.x)) best = {x, v};
  };
  if (hi == lo) return best;

  const double step = (hi - lo) / cells;
  int best_cell = 0;
  for (int k = 1; k <= cells; ++k) {
    const double x = k == cells ? hi : lo + k * step;
    const double v = f(x);
    if (v < best.value) {
      best = {x, v};
      best_cell = k;
    }
  }

  // Golden-section search on the two cells adjacent to the grid minimum.
  double a = lo + std::max(0, best_cell - 1) * step;
  double b = std::min(hi, lo + std::min(cells, best_cell + 1) * step);
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);
  while (b - a > tolerance) {
    // `<=` keeps the lower bracket on ties, steering toward smaller x.
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

namespace {

// Linearly up-scaled planes of one frame, cached across sigma candidates.
struct UpscaledFrame {
  std::vector<ImageF> planes;
};

double FilteredSquaredError(const UpscaledFrame& up, const PlanarFrame& ref,
                            double sigma) {
  const GaussianKernel kernel(sigma);
  const uint32_t max_value = ref.depth().max_value();
  double sum = 0.0;
  for (int c = 0; c < ref.channels(); ++c) {
    if (kernel.size() == 1) {
      sum += kernels::QuantizedSquaredErrorSum(up.planes[c], max_value,
                                               ref.plane(c));
    } else {
      sum += kernels::QuantizedSquaredErrorSum(
          kernels::ConvolveSeparable(up.planes[c], kernel.taps()), max_value,
          ref.plane(c));
    }
  }
  return sum;
}

}  // namespace

SigmaEstimate OptimizeSigma(const VideoSequence& low,
                            const VideoSequence& reference,
                            const SigmaSearchConfig& config) {
  config.Validate();
  if (low.size() != reference.size()) {
    throw Error(ErrorKind::kInvalidArgument, "frame count mismatch");
  }
  if (low.width() != reference.width() || low.height() != reference.height() ||
      low.channel_order() != reference.channel_order()) {
    throw Error(ErrorKind::kInvalidArgument, "geometry mismatch");
  }
  if (low.depth() >= reference.depth()) {
    throw Error(ErrorKind::kInvalidArgument,
                "low sequence must be shallower than the reference");
  }

  std::vector<UpscaledFrame> ups;
  ups.reserve(low.size());
  for (const PlanarFrame& f : low.frames()) {
    const PlanarFrame lin = LinearRescale(f, reference.depth());
    UpscaledFrame u;
    for (int c = 0; c < lin.channels(); ++c) {
      u.planes.push_back(
          kernels::ToImage(lin.plane(c), lin.width(), lin.height()));
    }
    ups.push_back(std::move(u));
  }
  const double samples_per_frame =
      static_cast<double>(reference.frame(0).samples_per_plane()) *
      reference.channels();

  SigmaEstimate out;
  if (config.granularity == SigmaGranularity::kPerSequence) {
    const double total = samples_per_frame * reference.size();
    auto mse = [&](double sigma) {
      double sum = 0.0;
      for (size_t t = 0; t < ups.size(); ++t) {
        sum += FilteredSquaredError(ups[t], reference.frame(t), sigma);
      }
      return sum / total;
    };
    const ScalarMinimum m = GridThenGoldenMinimize(
        mse, config.sigma_lo, config.sigma_hi, config.grid_cells,
        config.tolerance);
    out.sigma.push_back(m.x);
    out.mse.push_back(m.value);
  } else {
    for (size_t t = 0; t < ups.size(); ++t) {
      auto mse = [&](double sigma) {
        return FilteredSquaredError(ups[t], reference.frame(t), sigma) /
               samples_per_frame;
      };
      const ScalarMinimum m = GridThenGoldenMinimize(
          mse, config.sigma_lo, config.sigma_hi, config.grid_cells,
          config.tolerance);
      out.sigma.push_back(m.x);
      out.mse.push_back(m.value);
    }
  }
  return out;
}

AdaptationMethod AdaptationMethod::Linear() {
  return {LinearDown{}, LinearUp{}};
}

AdaptationMethod AdaptationMethod::ErrorDiffusion() {
  return {ErrorDiffusionDown{BuiltinMatrix("sierra")}, LinearUp{}};
}

AdaptationMethod AdaptationMethod::AdaptiveGaussian(
    std::optional<double> sigma) {
  return {ErrorDiffusionDown{BuiltinMatrix("sierra")},
          GaussianUp{sigma, SigmaSearchConfig{}}};
}

std::string AdaptationMethod::Label() const {
  std::string label;
  if (const auto* ed = std::get_if<ErrorDiffusionDown>(&down)) {
    label = "error_diffusion(" + ed->matrix.name() + ")";
  } else {
    label = "linear";
  }
  label += "+";
  if (const auto* g = std::get_if<GaussianUp>(&up)) {
    label += g->sigma ? "gaussian(" + std::to_string(*g->sigma) + ")"
                      : "gaussian(auto)";
  } else {
    label += "linear";
  }
  return label;
}

double FrameMse(const PlanarFrame& a, const PlanarFrame& b) {
  if (!a.SameLayout(b)) {
    throw Error(ErrorKind::kInvalidArgument, "frame layout mismatch");
  }
  double sum = 0.0;
  for (int c = 0; c < a.channels(); ++c) {
    sum += kernels::SquaredErrorSum(a.plane(c), b.plane(c));
  }
  return sum / (static_cast<double>(a.samples_per_plane()) * a.channels());
}

RoundTripResult RoundTrip(const VideoSequence& seq, BitDepth target,
                          const AdaptationMethod& method) {
  if (target >= seq.depth()) {
    throw Error(ErrorKind::kPrecondition,
                "round-trip target depth " + std::to_string(target.bits()) +
                    " must be below source " +
                    std::to_string(seq.depth().bits()));
  }
  VideoSequence down =
      std::holds_alternative<ErrorDiffusionDown>(method.down)
          ? ErrorDiffuseDownsample(
                seq, target, std::get<ErrorDiffusionDown>(method.down).matrix)
          : LinearRescale(seq, target);

  std::optional<SigmaEstimate> sigma;
  std::optional<VideoSequence> recon;
  if (const auto* g = std::get_if<GaussianUp>(&method.up)) {
    if (g->sigma) {
      sigma = SigmaEstimate{{*g->sigma}, {}};
    } else {
      sigma = OptimizeSigma(down, seq, g->search);
    }
    std::vector<double> per_frame(seq.size());
    for (size_t t = 0; t < seq.size(); ++t) per_frame[t] = sigma->ForFrame(t);
    recon.emplace(GaussianUpsample(down, seq.depth(), per_frame));
  } else {
    recon.emplace(LinearRescale(down, seq.depth()));
  }

  std::vector<double> mse(seq.size());
  for (size_t t = 0; t < seq.size(); ++t) {
    mse[t] = FrameMse(seq.frame(t), recon->frame(t));
  }
  if (sigma && sigma->mse.empty()) {
    sigma->mse = {std::accumulate(mse.begin(), mse.end(), 0.0) / mse.size()};
  }
  return {std::move(down), std::move(*recon), std::move(mse),
          std::move(sigma)};
}

}  // namespace bitdepth
