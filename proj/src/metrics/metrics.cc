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

#include "bitdepth/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "bitdepth/error.h"

namespace bitdepth {
namespace metrics {
namespace {

std::vector<double> GaussianTaps(int n, double sigma) {
  std::vector<double> taps(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = i - (n - 1) / 2.0;
    taps[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    sum += taps[i];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

const std::vector<double>& SsimTaps() {
  static const std::vector<double> taps = GaussianTaps(kSsimWindow, kSsimSigma);
  return taps;
}

// |v|^w carrying the sign of v, so negative contrast terms stay real.
double SignedPow(double v, double w) {
  return v < 0 ? -std::pow(-v, w) : std::pow(v, w);
}

// Local first and second moments over valid Gaussian windows.
struct Moments {
  ImageF mu_x, mu_y, var_x, var_y, cov;
};

Moments LocalMoments(const ImageF& x, const ImageF& y,
                     std::span<const double> taps) {
  Moments m;
  m.mu_x = kernels::FilterValid(x, taps);
  m.mu_y = kernels::FilterValid(y, taps);
  m.var_x = kernels::FilterValid(kernels::Multiply(x, x), taps);
  m.var_y = kernels::FilterValid(kernels::Multiply(y, y), taps);
  m.cov = kernels::FilterValid(kernels::Multiply(x, y), taps);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(m.mu_x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double mx = m.mu_x.data[i];
    const double my = m.mu_y.data[i];
    m.var_x.data[i] -= mx * mx;
    m.var_y.data[i] -= my * my;
    m.cov.data[i] -= mx * my;
  }
  return m;
}

}  // namespace

SsimStats SsimPlane(const ImageF& x, const ImageF& y, double dynamic_range) {
  if (x.width < kSsimWindow || x.height < kSsimWindow) {
    throw Error(ErrorKind::kPrecondition,
                "SSIM needs frames of at least 11x11");
  }
  const Moments m = LocalMoments(x, y, SsimTaps());
  const double c1 = (0.01 * dynamic_range) * (0.01 * dynamic_range);
  const double c2 = (0.03 * dynamic_range) * (0.03 * dynamic_range);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(m.mu_x.size());
  double ssim_sum = 0.0;
  double cs_sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : ssim_sum, cs_sum)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double mx = m.mu_x.data[i];
    const double my = m.mu_y.data[i];
    const double cs = (2.0 * m.cov.data[i] + c2) /
                      (m.var_x.data[i] + m.var_y.data[i] + c2);
    const double l = (2.0 * mx * my + c1) / (mx * mx + my * my + c1);
    ssim_sum += l * cs;
    cs_sum += cs;
  }
  return {ssim_sum / n, cs_sum / n};
}

ImageF Downsample2x2(const ImageF& img) {
  const int w = img.width / 2;
  const int h = img.height / 2;
  ImageF out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.at(x, y) = 0.25 * (img.at(2 * x, 2 * y) + img.at(2 * x + 1, 2 * y) +
                             img.at(2 * x, 2 * y + 1) +
                             img.at(2 * x + 1, 2 * y + 1));
    }
  }
  return out;
}

double MsSsimPlane(const ImageF& x, const ImageF& y, double dynamic_range) {
  if (x.width < kMsSsimMinSize || x.height < kMsSsimMinSize) {
    throw Error(ErrorKind::kPrecondition,
                "MS-SSIM needs frames of at least " +
                    std::to_string(kMsSsimMinSize) + " pixels per side");
  }
  ImageF a = x;
  ImageF b = y;
  double result = 1.0;
  for (int s = 0; s < kMsSsimScales; ++s) {
    const SsimStats stats = SsimPlane(a, b, dynamic_range);
    if (s + 1 < kMsSsimScales) {
      result *= SignedPow(stats.cs, kMsSsimWeights[s]);
      a = Downsample2x2(a);
      b = Downsample2x2(b);
    } else {
      result *= SignedPow(stats.ssim, kMsSsimWeights[s]);
    }
  }
  return result;
}

double VifPlane(const ImageF& x, const ImageF& y, double dynamic_range) {
  if (x.width < kVifMinSize || x.height < kVifMinSize) {
    throw Error(ErrorKind::kPrecondition,
                "VIF needs frames of at least " + std::to_string(kVifMinSize) +
                    " pixels per side");
  }
  // The HVS noise variance is calibrated for an 8-bit signal range.
  constexpr double kNoiseVar = 2.0;
  constexpr double kEps = 1e-10;
  const double to8 = 255.0 / dynamic_range;
  ImageF ref(x.width, x.height);
  ImageF dist(y.width, y.height);
  for (size_t i = 0; i < x.size(); ++i) {
    ref.data[i] = x.data[i] * to8;
    dist.data[i] = y.data[i] * to8;
  }

  double num = 0.0;
  double den = 0.0;
  for (int scale = 1; scale <= kVifScales; ++scale) {
    const int n = (1 << (kVifScales - scale + 1)) + 1;
    const std::vector<double> taps = GaussianTaps(n, n / 5.0);
    if (scale > 1) {
      ImageF r = kernels::FilterValid(ref, taps);
      ImageF d = kernels::FilterValid(dist, taps);
      ImageF rr((r.width + 1) / 2, (r.height + 1) / 2);
      ImageF dd(rr.width, rr.height);
      for (int yy = 0; yy < rr.height; ++yy) {
        for (int xx = 0; xx < rr.width; ++xx) {
          rr.at(xx, yy) = r.at(2 * xx, 2 * yy);
          dd.at(xx, yy) = d.at(2 * xx, 2 * yy);
        }
      }
      ref = std::move(rr);
      dist = std::move(dd);
    }
    const Moments m = LocalMoments(ref, dist, taps);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(m.mu_x.size());
    double num_s = 0.0;
    double den_s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : num_s, den_s)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      double s1 = std::max(0.0, m.var_x.data[i]);
      const double s2 = std::max(0.0, m.var_y.data[i]);
      const double s12 = m.cov.data[i];
      double g = s12 / (s1 + kEps);
      double sv = s2 - g * s12;
      if (s1 < kEps) {
        g = 0.0;
        sv = s2;
        s1 = 0.0;
      }
      if (s2 < kEps) {
        g = 0.0;
        sv = 0.0;
      }
      if (g < 0.0) {
        sv = s2;
        g = 0.0;
      }
      sv = std::max(sv, kEps);
      num_s += std::log10(1.0 + g * g * s1 / (sv + kNoiseVar));
      den_s += std::log10(1.0 + s1 / kNoiseVar);
    }
    num += num_s;
    den += den_s;
  }
  if (den <= 0.0) {
    // A featureless reference carries no information to preserve.
    return x.data == y.data ? 1.0 : 0.0;
  }
  return num / den;
}

}  // namespace metrics

namespace {

void CheckLayout(const PlanarFrame& ref, const PlanarFrame& test) {
  if (!ref.SameLayout(test)) {
    throw Error(ErrorKind::kInvalidArgument,
                "reference and test frames differ in dimensions, depth or "
                "channel order");
  }
}

template <typename PlaneMetric>
double ColorReduce(const PlanarFrame& ref, const PlanarFrame& test,
                   const MetricOptions& options, PlaneMetric metric) {
  CheckLayout(ref, test);
  const double range = ref.depth().max_value();
  if (options.color == ColorMode::kLuma) {
    return metric(LumaPlane(ref), LumaPlane(test), range);
  }
  double sum = 0.0;
  for (int c = 0; c < ref.channels(); ++c) {
    sum += metric(kernels::ToImage(ref.plane(c), ref.width(), ref.height()),
                  kernels::ToImage(test.plane(c), test.width(), test.height()),
                  range);
  }
  return sum / ref.channels();
}

}  // namespace

MetricId ParseMetricId(std::string_view name) {
  if (name == "psnr") return MetricId::kPsnr;
  if (name == "ssim") return MetricId::kSsim;
  if (name == "ms_ssim" || name == "ms-ssim" || name == "msssim") {
    return MetricId::kMsSsim;
  }
  if (name == "vif") return MetricId::kVif;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown metric '" + std::string(name) + "'");
}

std::string_view MetricName(MetricId id) {
  switch (id) {
    case MetricId::kPsnr:
      return "psnr";
    case MetricId::kSsim:
      return "ssim";
    case MetricId::kMsSsim:
      return "ms_ssim";
    case MetricId::kVif:
      return "vif";
  }
  return "unknown";
}

std::vector<MetricId> AllMetrics() {
  return {MetricId::kPsnr, MetricId::kSsim, MetricId::kMsSsim, MetricId::kVif};
}

ImageF LumaPlane(const PlanarFrame& frame) {
  const std::string& order = frame.channel_order();
  const int w = frame.width();
  const int h = frame.height();
  const auto r = order.find('R');
  const auto g = order.find('G');
  const auto b = order.find('B');
  if (r != std::string::npos && g != std::string::npos &&
      b != std::string::npos) {
    constexpr double kKr = 0.2627;
    constexpr double kKg = 0.6780;
    constexpr double kKb = 0.0593;
    const auto pr = frame.plane(static_cast<int>(r));
    const auto pg = frame.plane(static_cast<int>(g));
    const auto pb = frame.plane(static_cast<int>(b));
    ImageF luma(w, h);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(luma.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      luma.data[i] = kKr * pr[i] + kKg * pg[i] + kKb * pb[i];
    }
    return luma;
  }
  if (const auto y = order.find('Y'); y != std::string::npos) {
    return kernels::ToImage(frame.plane(static_cast<int>(y)), w, h);
  }
  if (frame.channels() == 1) return kernels::ToImage(frame.plane(0), w, h);
  throw Error(ErrorKind::kInvalidArgument,
              "cannot derive luma from channel order '" + order + "'");
}

MetricScore Psnr(const PlanarFrame& ref, const PlanarFrame& test) {
  CheckLayout(ref, test);
  double sse = 0.0;
  for (int c = 0; c < ref.channels(); ++c) {
    sse += kernels::SquaredErrorSum(ref.plane(c), test.plane(c));
  }
  const double mse =
      sse / (static_cast<double>(ref.samples_per_plane()) * ref.channels());
  if (mse == 0.0) return {kPsnrCap, MetricId::kPsnr, std::nullopt};
  const double peak = ref.depth().max_value();
  const double psnr = 10.0 * std::log10(peak * peak / mse);
  return {std::min(psnr, kPsnrCap), MetricId::kPsnr, std::nullopt};
}

MetricScore Ssim(const PlanarFrame& ref, const PlanarFrame& test,
                 const MetricOptions& options) {
  const double v = ColorReduce(
      ref, test, options, [](const ImageF& x, const ImageF& y, double range) {
        return metrics::SsimPlane(x, y, range).ssim;
      });
  return {v, MetricId::kSsim, std::nullopt};
}

MetricScore MsSsim(const PlanarFrame& ref, const PlanarFrame& test,
                   const MetricOptions& options) {
  return {ColorReduce(ref, test, options, metrics::MsSsimPlane),
          MetricId::kMsSsim, std::nullopt};
}

MetricScore Vif(const PlanarFrame& ref, const PlanarFrame& test,
                const MetricOptions& options) {
  return {ColorReduce(ref, test, options, metrics::VifPlane), MetricId::kVif,
          std::nullopt};
}

MetricScore FrameScore(MetricId metric, const PlanarFrame& ref,
                       const PlanarFrame& test, const MetricOptions& options) {
  switch (metric) {
    case MetricId::kPsnr:
      return Psnr(ref, test);
    case MetricId::kSsim:
      return Ssim(ref, test, options);
    case MetricId::kMsSsim:
      return MsSsim(ref, test, options);
    case MetricId::kVif:
      return Vif(ref, test, options);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown metric");
}

std::vector<MetricScore> FrameScores(const VideoSequence& ref,
                                     const VideoSequence& test,
                                     MetricId metric,
                                     const MetricOptions& options) {
  if (ref.size() != test.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "frame count mismatch: " + std::to_string(ref.size()) +
                    " vs " + std::to_string(test.size()));
  }
  std::vector<MetricScore> out;
  out.reserve(ref.size());
  for (size_t t = 0; t < ref.size(); ++t) {
    MetricScore s = FrameScore(metric, ref.frame(t), test.frame(t), options);
    s.frame = t;
    out.push_back(s);
  }
  return out;
}

MetricScore SequenceScore(const VideoSequence& ref, const VideoSequence& test,
                          MetricId metric, const MetricOptions& options) {
  const std::vector<MetricScore> frames =
      FrameScores(ref, test, metric, options);
  double sum = 0.0;
  for (const MetricScore& s : frames) sum += s.value;
  return {sum / frames.size(), metric, std::nullopt};
}

}  // namespace bitdepth
