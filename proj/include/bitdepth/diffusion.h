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

#ifndef BITDEPTH_DIFFUSION_H_
#define BITDEPTH_DIFFUSION_H_

#include <string>
#include <string_view>
#include <vector>

#include "bitdepth/frame.h"

namespace bitdepth {

// An error-diffusion kernel with integer numerators over a common
// denominator, so the unit-sum invariant is checked exactly.
//
//   numerators[r][c] / denominator is the share of the quantization error
//   sent to the pixel at (row + r - anchor_row, col + c - anchor_col).
//
// Construction enforces raster causality (nothing at or before the anchor
// on the anchor row, nothing on earlier rows) and that numerators sum to the
// denominator.
class DiffusionMatrix {
 public:
  struct Tap {
    int dy;
    int dx;
    int numerator;
  };

  DiffusionMatrix(std::string name, std::vector<std::vector<int>> numerators,
                  int denominator, int anchor_row, int anchor_col);

  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& numerators() const {
    return numerators_;
  }
  int denominator() const { return denominator_; }
  int anchor_row() const { return anchor_row_; }
  int anchor_col() const { return anchor_col_; }

  // Non-zero entries as offsets from the current pixel, raster order.
  const std::vector<Tap>& taps() const { return taps_; }
  int NumeratorSum() const;

  friend bool operator==(const DiffusionMatrix& a, const DiffusionMatrix& b) {
    return a.numerators_ == b.numerators_ &&
           a.denominator_ == b.denominator_ &&
           a.anchor_row_ == b.anchor_row_ && a.anchor_col_ == b.anchor_col_;
  }

 private:
  std::string name_;
  std::vector<std::vector<int>> numerators_;
  int denominator_;
  int anchor_row_;
  int anchor_col_;
  std::vector<Tap> taps_;
};

// "sierra", "floyd_steinberg", "jarvis", "sierra_lite". Hyphenated spellings
// are accepted. Throws Error(kInvalidArgument) for anything else.
DiffusionMatrix BuiltinMatrix(std::string_view name);

std::vector<std::string> BuiltinMatrixNames();

// Down-samples by error diffusion. Pixels are visited in raster order; each
// working value w is quantized with the linear rule, and the error
// w - reconstruction(q), measured in source code values, is pushed to the
// unvisited neighbours. The working buffer is real-valued and unclamped;
// only outputs are clamped. Weights falling outside the frame are dropped.
// Channels are independent. Throws Error(kPrecondition) unless
// target < frame depth.
PlanarFrame ErrorDiffuseDownsample(const PlanarFrame& frame, BitDepth target,
                                   const DiffusionMatrix& matrix);

VideoSequence ErrorDiffuseDownsample(const VideoSequence& seq,
                                     BitDepth target,
                                     const DiffusionMatrix& matrix);

}  // namespace bitdepth

#endif  // BITDEPTH_DIFFUSION_H_
