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

#include "wormgait/model.hpp"

namespace wormgait {
namespace {

TEST(Coefficients, WorkedExampleValues) {
  const DerivedCoefficients c = derive_coefficients(FrictionParams{});
  EXPECT_DOUBLE_EQ(c.alpha, 0.55);
  EXPECT_DOUBLE_EQ(c.beta, 0.45);
  EXPECT_DOUBLE_EQ(c.rho, 0.1);
  EXPECT_DOUBLE_EQ(c.eta, 5.0);
}

TEST(Coefficients, RejectsNonPhysicalFriction) {
  EXPECT_THROW(validate(FrictionParams{-0.1, 1.0, 1.0, 5.0}), Error);
  EXPECT_THROW(validate(FrictionParams{0.1, 1.0, 1.0, 0.5}), Error);
  EXPECT_THROW(validate(FrictionParams{0.1, 0.0, 1.0, 5.0}), Error);
}

TEST(Basis, RoundTripsPhysicalState) {
  const WormState w{1.5, -2.0, 38.0, 0.25, -3.5};
  const ConfigState c = to_config(w);
  EXPECT_DOUBLE_EQ(c.d, 40.0);
  EXPECT_DOUBLE_EQ(c.v, (-3.5 - 0.25) / 2.0);
  EXPECT_DOUBLE_EQ(c.u, (-3.5 + 0.25) / 2.0);
  EXPECT_DOUBLE_EQ(c.tail_velocity(), 0.25);
  EXPECT_DOUBLE_EQ(c.head_velocity(), -3.5);
  const WormState back = from_config(c, -2.0);
  EXPECT_DOUBLE_EQ(back.x2, 38.0);
  EXPECT_DOUBLE_EQ(back.x1dot, 0.25);
  EXPECT_DOUBLE_EQ(back.x2dot, -3.5);
}

TEST(Modes, GaitCasesFollowTheSignTable) {
  // (force, tail, head) for cases 1..6.
  const int signs[6][3] = {{1, 1, -1}, {1, 1, 1}, {1, -1, 1},
                           {-1, -1, 1}, {-1, 1, 1}, {-1, 1, -1}};
  for (int k = 0; k < 6; ++k) {
    const Mode m = classify_mode(signs[k][0], signs[k][1], signs[k][2]);
    EXPECT_EQ(m.case_id, k + 1);
    EXPECT_TRUE(m.valid_for_gait);
    EXPECT_EQ(mode_for_case(k + 1), m);
  }
  EXPECT_FALSE(mode_for_case(7).valid_for_gait);
  EXPECT_FALSE(mode_for_case(8).valid_for_gait);
  EXPECT_THROW(classify_mode(1, 0, 1), Error);
  EXPECT_THROW(mode_for_case(9), Error);
}

// Rates must equal what the two-body equations give for each sign pattern.
TEST(Modes, RatesMatchFrictionLaw) {
  const WormModel m = WormModel::make(FrictionParams{0.3, 1.7, 1.7, 4.0});
  const double F = 2.5;
  for (int id = 1; id <= 8; ++id) {
    const Mode mode = mode_for_case(id);
    const double f = mode.force_sign * F;
    const double a1 = -f + kinetic_friction(mode.tail_sign, m.friction);
    const double a2 = f + kinetic_friction(mode.head_sign, m.friction);
    const ModeRates r = mode_rates(id, m);
    EXPECT_NEAR(r.force_coeff * F + r.v_offset, 0.5 * (a2 - a1), 1e-15) << id;
    EXPECT_NEAR(r.u_rate, 0.5 * (a1 + a2), 1e-15) << id;
  }
}

TEST(Interval, LerpAndContainment) {
  const Interval i{-1.0, 3.0};
  EXPECT_DOUBLE_EQ(i.at(0.25), 0.0);
  EXPECT_TRUE(i.contains(3.0));
  EXPECT_FALSE(i.contains(3.1));
  EXPECT_TRUE(i.contains(3.1, 0.2));
  EXPECT_TRUE((Interval{1.0, 0.0}).empty());
}

}  // namespace
}  // namespace wormgait
