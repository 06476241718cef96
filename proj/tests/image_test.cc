// Copyright 2026 The ilsmooth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ilsmooth/image.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

namespace ilsmooth {
namespace {

TEST(ImagePlaneTest, RejectsMismatchedData) {
  EXPECT_THROW(ImagePlane(3, 2, std::vector<double>(5)), DimensionError);
  EXPECT_THROW(ImagePlane(2, 2, {0.0, 1.0, NAN, 0.0}), ParameterError);
}

TEST(MultiChannelImageTest, ValidatesChannelsAndRange) {
  EXPECT_THROW(MultiChannelImage({ImagePlane(2, 2), ImagePlane(2, 2)}, RangeTag::kUnit),
               DimensionError);
  EXPECT_THROW(MultiChannelImage({ImagePlane(2, 2), ImagePlane(3, 2), ImagePlane(2, 2)},
                                 RangeTag::kUnit),
               DimensionError);
  EXPECT_THROW(MultiChannelImage({ImagePlane(2, 2, 1.5)}, RangeTag::kUnit),
               ParameterError);
  EXPECT_NO_THROW(MultiChannelImage({ImagePlane(2, 2, 1.0 + 5e-10)}, RangeTag::kUnit));
  EXPECT_NO_THROW(MultiChannelImage({ImagePlane(2, 2, 7.5)}, RangeTag::kHdr));
}

TEST(ForwardGradientsTest, ConstantPlaneHasZeroGradient) {
  const GradientPair g = ForwardGradients(ImagePlane(4, 4, 0.5));
  for (size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(g.gx[i], 0.0);
    EXPECT_EQ(g.gy[i], 0.0);
  }
}

TEST(ForwardGradientsTest, RampWrapsAtRightEdge) {
  const ImagePlane p(4, 2, {0, 0.25, 0.5, 0.75, 0, 0.25, 0.5, 0.75});
  const GradientPair g = ForwardGradients(p);
  const double expected[4] = {0.25, 0.25, 0.25, -0.75};
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 4; ++x) {
      EXPECT_DOUBLE_EQ(g.gx.at(x, y), expected[x]);
      EXPECT_EQ(g.gy.at(x, y), 0.0);
    }
  }
}

TEST(ForwardGradientsTest, MatchesElementwiseOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const oracle::Plane values = oracle::RandomPlane(8, 8, rng);
    oracle::Plane gx, gy;
    oracle::Gradients(values, 8, 8, gx, gy);
    const GradientPair g = ForwardGradients(ImagePlane(8, 8, values));
    for (size_t i = 0; i < values.size(); ++i) {
      EXPECT_EQ(g.gx[i], gx[i]);
      EXPECT_EQ(g.gy[i], gy[i]);
    }
  }
}

TEST(ForwardGradientsTest, IsLinear) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 3 + trial % 5;
    const int h = 2 + trial % 7;
    const oracle::Plane pv = oracle::RandomPlane(w, h, rng);
    const oracle::Plane qv = oracle::RandomPlane(w, h, rng);
    const double a = coef(rng);
    const double b = coef(rng);
    oracle::Plane mix(pv.size());
    for (size_t i = 0; i < mix.size(); ++i) mix[i] = a * pv[i] + b * qv[i];
    const GradientPair gp = ForwardGradients(ImagePlane(w, h, pv));
    const GradientPair gq = ForwardGradients(ImagePlane(w, h, qv));
    const GradientPair gm = ForwardGradients(ImagePlane(w, h, mix));
    for (size_t i = 0; i < mix.size(); ++i) {
      const double ex = a * gp.gx[i] + b * gq.gx[i];
      const double ey = a * gp.gy[i] + b * gq.gy[i];
      EXPECT_NEAR(gm.gx[i], ex, 1e-12 * (1.0 + std::abs(ex)));
      EXPECT_NEAR(gm.gy[i], ey, 1e-12 * (1.0 + std::abs(ey)));
    }
  }
}

TEST(ForwardGradientsTest, PeriodicGradientsSumToZero) {
  std::mt19937_64 rng(3);
  const int w = 13, h = 9;
  const GradientPair g = ForwardGradients(ImagePlane(w, h, oracle::RandomPlane(w, h, rng)));
  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < g.gx.size(); ++i) {
    sx += g.gx[i];
    sy += g.gy[i];
  }
  EXPECT_LE(std::abs(sx), 1e-6 * w * h);
  EXPECT_LE(std::abs(sy), 1e-6 * w * h);
}

TEST(ForwardGradientsTest, RejectsTooSmall) {
  EXPECT_THROW(ForwardGradients(ImagePlane(1, 4)), DimensionError);
  EXPECT_THROW(ForwardGradients(ImagePlane(4, 1)), DimensionError);
}

TEST(LuminanceTest, GrayIsIdentityAndIdempotent) {
  std::mt19937_64 rng(5);
  const ImagePlane p(5, 4, oracle::RandomPlane(5, 4, rng));
  const MultiChannelImage gray({p}, RangeTag::kUnit);
  EXPECT_EQ(Luminance(gray), p);
  const MultiChannelImage again({Luminance(gray)}, RangeTag::kUnit);
  EXPECT_EQ(Luminance(again), Luminance(gray));
}

TEST(LuminanceTest, Rec601Weights) {
  const MultiChannelImage white({ImagePlane(2, 2, 1.0), ImagePlane(2, 2, 1.0),
                                 ImagePlane(2, 2, 1.0)},
                                RangeTag::kUnit);
  const ImagePlane white_lum = Luminance(white);
  for (double v : white_lum.values()) EXPECT_NEAR(v, 1.0, 1e-15);
  const MultiChannelImage red({ImagePlane(2, 2, 1.0), ImagePlane(2, 2, 0.0),
                               ImagePlane(2, 2, 0.0)},
                              RangeTag::kUnit);
  const ImagePlane red_lum = Luminance(red);
  for (double v : red_lum.values()) EXPECT_DOUBLE_EQ(v, 0.299);
}

TEST(ClampUnitTest, ClipsAndTags) {
  std::mt19937_64 rng(9);
  const ImagePlane in_range(4, 3, oracle::RandomPlane(4, 3, rng));
  const MultiChannelImage img({in_range}, RangeTag::kUnit);
  EXPECT_EQ(ClampUnit(img), img);

  const MultiChannelImage hdr({ImagePlane(2, 2, {1.0000003, -0.02, 0.5, 4.0})},
                              RangeTag::kHdr);
  const MultiChannelImage clipped = ClampUnit(hdr);
  EXPECT_EQ(clipped.range(), RangeTag::kUnit);
  EXPECT_EQ(clipped.channel(0)[0], 1.0);
  EXPECT_EQ(clipped.channel(0)[1], 0.0);
  EXPECT_EQ(clipped.channel(0)[2], 0.5);
  EXPECT_EQ(clipped.channel(0)[3], 1.0);
}

}  // namespace
}  // namespace ilsmooth
