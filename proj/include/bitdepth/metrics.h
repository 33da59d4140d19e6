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

#ifndef BITDEPTH_METRICS_H_
#define BITDEPTH_METRICS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "bitdepth/frame.h"
#include "bitdepth/kernels.h"

namespace bitdepth {

enum class MetricId { kPsnr, kSsim, kMsSsim, kVif };

// "psnr", "ssim", "ms_ssim" (or "ms-ssim"), "vif".
// Throws Error(kInvalidArgument) for anything else.
MetricId ParseMetricId(std::string_view name);
std::string_view MetricName(MetricId id);
std::vector<MetricId> AllMetrics();

struct MetricScore {
  double value;
  MetricId metric;
  // Set for a per-frame score, unset for a sequence average.
  std::optional<size_t> frame;
};

// How SSIM, MS-SSIM and VIF treat colour. PSNR always pools the squared
// error of every channel.
enum class ColorMode {
  kLuma,            // BT.2020-weighted luma of R,G,B
  kChannelAverage,  // metric per plane, averaged
};

struct MetricOptions {
  ColorMode color = ColorMode::kLuma;
};

inline constexpr double kPsnrCap = 100.0;

// Real-valued luma. RGB frames (any plane order) use the BT.2020 weights,
// frames with a 'Y' plane return it, single-plane frames return the plane.
ImageF LumaPlane(const PlanarFrame& frame);

// Frame-level metrics. All require frames of identical layout and throw
// Error(kInvalidArgument) otherwise; size preconditions throw
// Error(kPrecondition).
MetricScore Psnr(const PlanarFrame& ref, const PlanarFrame& test);
MetricScore Ssim(const PlanarFrame& ref, const PlanarFrame& test,
                 const MetricOptions& options = {});
MetricScore MsSsim(const PlanarFrame& ref, const PlanarFrame& test,
                   const MetricOptions& options = {});
MetricScore Vif(const PlanarFrame& ref, const PlanarFrame& test,
                const MetricOptions& options = {});

MetricScore FrameScore(MetricId metric, const PlanarFrame& ref,
                       const PlanarFrame& test,
                       const MetricOptions& options = {});

// Per-frame scores with frame indices set.
std::vector<MetricScore> FrameScores(const VideoSequence& ref,
                                     const VideoSequence& test,
                                     MetricId metric,
                                     const MetricOptions& options = {});

// Arithmetic mean of the per-frame scores (PSNR is averaged in dB).
// Throws Error(kInvalidArgument) on frame-count mismatch.
MetricScore SequenceScore(const VideoSequence& ref, const VideoSequence& test,
                          MetricId metric, const MetricOptions& options = {});

// Plane-level building blocks. `dynamic_range` is the peak code value.
namespace metrics {

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr int kMsSsimScales = 5;
inline constexpr double kMsSsimWeights[kMsSsimScales] = {
    0.0448, 0.2856, 0.3001, 0.2363, 0.1333};
inline constexpr int kMsSsimMinSize = kSsimWindow << (kMsSsimScales - 1);
inline constexpr int kVifScales = 4;
inline constexpr int kVifMinSize = 128;

struct SsimStats {
  double ssim;  // mean of the full SSIM map
  double cs;    // mean of the contrast-structure map
};

// Mean SSIM over valid 11x11 Gaussian windows.
SsimStats SsimPlane(const ImageF& x, const ImageF& y, double dynamic_range);
double MsSsimPlane(const ImageF& x, const ImageF& y, double dynamic_range);
double VifPlane(const ImageF& x, const ImageF& y, double dynamic_range);

// 2x2 block mean followed by decimation; odd trailing rows/columns drop.
ImageF Downsample2x2(const ImageF& img);

}  // namespace metrics
}  // namespace bitdepth

#endif  // BITDEPTH_METRICS_H_
