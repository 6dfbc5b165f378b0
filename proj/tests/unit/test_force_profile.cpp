/*
 Copyright 2026 The wormgait Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>

#include "wormgait/force_profile.hpp"
#include "wormgait/quadrature.hpp"
#include "wormgait/serialization.hpp"

namespace wormgait {
namespace {

ForceProfile mixed_profile() {
  return ForceProfile({Segment::constant(0.0, 0.5, 2.0),
                       Segment::affine(0.5, 1.25, 2.0, 4.5),
                       Segment::sampled(1.25, 2.0, {1.5, 3.0, 2.0, 4.0}),
                       Segment::harmonic(2.0, 3.0, 3.0, 1.0, 2.7, 0.4)});
}

double quad_integral(const ForceProfile& f, double a, double b) {
  return quad::integrate_split([&](double t) { return f.value(t); }, a, b,
                               f.breakpoints(), 1e-13, 1e-14)
      .value;
}

TEST(ForceProfile, IntegralsAgreeWithQuadrature) {
  const ForceProfile f = mixed_profile();
  for (auto [a, b] : {std::pair{0.0, 3.0}, {0.3, 1.9}, {1.1, 2.6}, {2.2, 2.9}}) {
    EXPECT_NEAR(f.integral(a, b), quad_integral(f, a, b), 1e-12);
    const double lag = quad::integrate_split([&](double s) { return (b - s) * f.value(s); },
                                             a, b, f.breakpoints(), 1e-13, 1e-14)
                           .value;
    EXPECT_NEAR(f.lag_integral(a, b), lag, 1e-12);
  }
}

TEST(ForceProfile, ValuesAreRightContinuousWithLeftLimits) {
  const ForceProfile f({Segment::constant(0.0, 1.0, 1.0), Segment::constant(1.0, 2.0, 5.0)});
  EXPECT_DOUBLE_EQ(f.value(1.0), 5.0);
  EXPECT_DOUBLE_EQ(f.left_value(1.0), 1.0);
  EXPECT_DOUBLE_EQ(f.value(2.0), 5.0);
  EXPECT_THROW(f.value(2.5), Error);
}

TEST(ForceProfile, SignedExtensionIsAntisymmetric) {
  const ForceProfile f = mixed_profile();
  for (double t : {0.0, 0.7, 1.6, 2.4, 2.99}) {
    EXPECT_DOUBLE_EQ(f.signed_value(t + 3.0), -f.signed_value(t));
  }
}

TEST(ForceProfile, HarmonicExtremaAreBracketed) {
  const ForceProfile f({Segment::harmonic(0.0, 4.0, 3.0, 1.5, 2.0, 0.0)});
  EXPECT_NEAR(f.max_value(0.0, 4.0), 4.5, 1e-15);
  EXPECT_NEAR(f.min_value(0.0, 4.0), 1.5, 1e-15);
  EXPECT_NEAR(f.max_value(0.0, 0.5), 1.5 * std::sin(1.0) + 3.0, 1e-14);
}

TEST(ForceProfile, SliceAppendPreservesIntegrals) {
  const ForceProfile f = mixed_profile();
  const ForceProfile left = f.slice(0.0, 1.6);
  const ForceProfile right = f.slice(1.6, 3.0);
  EXPECT_NEAR(left.duration(), 1.6, 1e-15);
  EXPECT_NEAR(left.integral(0.0, 1.6) + right.integral(0.0, 1.4), f.integral(0.0, 3.0), 1e-12);
  const ForceProfile joined = left.append(right);
  for (double t : {0.2, 1.3, 1.7, 2.5}) EXPECT_NEAR(joined.value(t), f.value(t), 1e-12);
}

TEST(ForceProfile, AdmissibilityUsesTheHarmonicRange) {
  const FrictionParams p{0.1, 1.0, 1.0, 5.0};
  EXPECT_TRUE(mixed_profile().admissible(p));
  EXPECT_FALSE(ForceProfile({Segment::harmonic(0.0, 1.0, 4.5, 1.0, 6.0, 0.0)}).admissible(p));
  EXPECT_FALSE(ForceProfile::constant(0.9, 1.0).admissible(p));
}

TEST(ForceProfile, BlendHitsTheTargetIntegral) {
  const FrictionParams p{0.1, 1.0, 1.0, 5.0};
  const ForceProfile f = ForceProfile::constant(2.0, 3.0);
  const ForceProfile up = blend_window_to_integral(f, 1.0, 2.0, 4.0, p);
  EXPECT_NEAR(up.integral(1.0, 2.0), 4.0, 1e-14);
  EXPECT_NEAR(up.integral(0.0, 1.0), 2.0, 1e-14);
  const ForceProfile down = blend_window_to_integral(f, 0.0, 3.0, 3.3, p);
  EXPECT_NEAR(down.integral(0.0, 3.0), 3.3, 1e-14);
  EXPECT_THROW(blend_window_to_integral(f, 0.0, 1.0, 6.0, p), Error);
}

TEST(ForceProfile, CumulativeAreaMatchesDoubleIntegral) {
  const ForceProfile f = mixed_profile();
  const CumulativeForce G = cumulative(f, 0.4, 2.8, CumulativePhase::G);
  const double expected = quad::integrate([&](double t) { return G.value(t); }, 0.0, 2.4,
                                          1e-13, 1e-14)
                              .value;
  EXPECT_NEAR(G.area(), expected, 1e-11);
  EXPECT_NEAR(G.area(0.0, 1.0) + G.area(1.0, 2.4), G.area(), 1e-12);
}

TEST(ForceProfile, RejectsGapsAndBadSegments) {
  EXPECT_THROW(ForceProfile({Segment::constant(0.0, 1.0, 1.0), Segment::constant(1.5, 2.0, 1.0)}),
               Error);
  EXPECT_THROW(ForceProfile({Segment::sampled(0.0, 1.0, {1.0})}), Error);
}

TEST(Serialization, ProfileRoundTripIsExact) {
  const ForceProfile f = mixed_profile().slice(0.123456789, 2.87654321);
  const ForceProfile back = profile_from_string(profile_to_string(f));
  EXPECT_EQ(back, f);
  for (double t : {0.0, 0.9, 1.9, 2.7}) EXPECT_EQ(back.value(t), f.value(t));
}

TEST(Serialization, MalformedDocumentsAreConfigErrors) {
  try {
    profile_from_string(R"([{"t_start": 0, "t_end": 1, "kind": "spline", "params": [1]}])");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Config);
  }
  EXPECT_THROW(profile_from_string("{"), Error);
}

}  // namespace
}  // namespace wormgait
