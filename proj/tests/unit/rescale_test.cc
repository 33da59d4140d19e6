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

#include "bitdepth/rescale.h"

#include "bitdepth/kernels.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace bitdepth {
namespace {

using ::bitdepth::testing::FrameFromRows;
using ::bitdepth::testing::RandomFrame;

// Every sample value of a depth in one single-row frame.
PlanarFrame AllValues(int bits) {
  const uint32_t max = BitDepth(bits).max_value();
  Plane p(max + 1);
  for (uint32_t v = 0; v <= max; ++v) p[v] = static_cast<uint16_t>(v);
  return PlanarFrame(static_cast<int>(max + 1), 1, BitDepth(bits), "Y", {p});
}

TEST(LinearRescaleTest, WorkedExamples) {
  // 10-bit to 2-bit: round(v * 3 / 1023).
  const PlanarFrame in =
      FrameFromRows(10, {{0, 170, 171, 512, 852, 853, 1023}});
  const PlanarFrame out = LinearRescale(in, BitDepth(2));
  EXPECT_EQ(out.depth(), BitDepth(2));
  const std::vector<uint16_t> got(out.plane(0).begin(), out.plane(0).end());
  EXPECT_EQ(got, (std::vector<uint16_t>{0, 0, 1, 2, 2, 3, 3}));
  // Up-scaling 2-bit codes lands on 0, 341, 682, 1023.
  const PlanarFrame up =
      LinearRescale(FrameFromRows(2, {{0, 1, 2, 3}}), BitDepth(10));
  const std::vector<uint16_t> got_up(up.plane(0).begin(), up.plane(0).end());
  EXPECT_EQ(got_up, (std::vector<uint16_t>{0, 341, 682, 1023}));
}

TEST(LinearRescaleTest, ExhaustiveEndpointsAndMonotonicity) {
  for (int a = 1; a <= 12; ++a) {
    const PlanarFrame in = AllValues(a);
    for (int b = 1; b <= 12; ++b) {
      const PlanarFrame out = LinearRescale(in, BitDepth(b));
      const auto p = out.plane(0);
      ASSERT_EQ(p.front(), 0) << a << "->" << b;
      ASSERT_EQ(p.back(), BitDepth(b).max_value()) << a << "->" << b;
      for (size_t i = 1; i < p.size(); ++i) {
        ASSERT_GE(p[i], p[i - 1]) << a << "->" << b << " at " << i;
      }
    }
  }
}

TEST(LinearRescaleTest, UpThenDownIsIdentity) {
  for (int a = 1; a <= 12; ++a) {
    const PlanarFrame in = AllValues(a);
    for (int b = a; b <= 16; ++b) {
      const PlanarFrame back =
          LinearRescale(LinearRescale(in, BitDepth(b)), BitDepth(a));
      ASSERT_EQ(back, in) << a << "->" << b;
    }
  }
}

TEST(LinearRescaleTest, MatchesFloatingPointFormula) {
  const PlanarFrame in = RandomFrame(50, 20, 10, 4, "RGB");
  for (int b : {1, 2, 4, 6, 8, 12, 16}) {
    const PlanarFrame out = LinearRescale(in, BitDepth(b));
    const double m = BitDepth(b).max_value();
    for (int c = 0; c < 3; ++c) {
      for (size_t i = 0; i < in.samples_per_plane(); ++i) {
        const double expected = RoundHalfAway(in.plane(c)[i] * m / 1023.0);
        ASSERT_EQ(out.plane(c)[i], expected);
      }
    }
  }
}

TEST(LinearRescaleTest, SameDepthIsIdentityAndSequencesMapPerFrame) {
  const PlanarFrame f = RandomFrame(9, 9, 8, 1);
  EXPECT_EQ(LinearRescale(f, BitDepth(8)), f);
  const VideoSequence seq({f, RandomFrame(9, 9, 8, 2)}, 25.0, "s");
  const VideoSequence out = LinearRescale(seq, BitDepth(4));
  EXPECT_EQ(out.size(), 2u);
  EXPECT_EQ(out.frame(1), LinearRescale(seq.frame(1), BitDepth(4)));
  EXPECT_EQ(out.name(), "s");
  EXPECT_EQ(out.fps(), 25.0);
}

}  // namespace
}  // namespace bitdepth
