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

#ifndef BITDEPTH_REFERENCE_KERNELS_H_
#define BITDEPTH_REFERENCE_KERNELS_H_

// Straightforward serial implementations of the kernels in kernels.h. They
// trade speed for obviousness and exist to check the parallel versions.

#include <cstdint>
#include <span>

#include "bitdepth/kernels.h"

namespace bitdepth::reference {

// Per-sample formula in floating point, no lookup table.
Plane RescalePlane(std::span<const uint16_t> in, uint32_t from_max,
                   uint32_t to_max);

// Direct n x n 2-D convolution with symmetric padding. `kernel` is row-major
// n*n and need not be separable.
ImageF Convolve2D(const ImageF& img, std::span<const double> kernel, int n);

// Direct n x n 2-D correlation over the valid region.
ImageF FilterValid2D(const ImageF& img, std::span<const double> kernel, int n);

double SquaredErrorSum(std::span<const uint16_t> a,
                       std::span<const uint16_t> b);

// Mean SSIM over valid 11x11 windows, computed window by window.
double SsimDirect(const ImageF& x, const ImageF& y, double dynamic_range);

}  // namespace bitdepth::reference

#endif  // BITDEPTH_REFERENCE_KERNELS_H_
