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

#include "wormgait/constraints.hpp"
#include "wormgait/optimizer.hpp"

namespace wormgait {
namespace {

// Independent reference evaluation at (T1r, Tminr) = (0.363635, 0.563214).
constexpr double kT1 = 0.3305772727272727;
constexpr double kU1 = 3.737603863636364;
constexpr double kV1 = -5.059912954545455;
constexpr double kTmin = 2.251869381818182;

struct WorkedExample {
  WormModel model = WormModel::make(FrictionParams{});
  GaitSchedule schedule = build_schedule(10.0, kT1, model.coeffs);
  BoundaryTargets targets = boundary_targets(schedule, kU1, kV1, model);
};

TEST(BoundaryTargets, WorkedExampleValues) {
  const WorkedExample w;
  EXPECT_NEAR(w.targets.H_end, 0.991731818181818, 1e-13);
  EXPECT_NEAR(w.targets.G_mid, 0.45 * kT1 + kU1, 1e-13);
  EXPECT_NEAR(w.targets.G_end, 7.363636363636365, 1e-13);
  EXPECT_NEAR(w.targets.I_end, 1.9008227272727272, 1e-13);
}

TEST(BoundaryTargets, EnvelopeViolationIsReported) {
  const WorkedExample w;
  // v1 far below the region makes H_end exceed f_u T1.
  try {
    boundary_targets(w.schedule, kU1, -20.0, w.model);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleTargets);
  }
  EXPECT_NO_THROW(boundary_targets_unchecked(w.schedule, kU1, -20.0, w.model));
  EXPECT_NO_THROW(check_phase_two_envelopes(w.targets, w.schedule, kTmin, w.model.friction));
  EXPECT_THROW(check_phase_two_envelopes(w.targets, w.schedule, 0.1, w.model.friction), Error);
}

TEST(Excursion, ConstantAndFunctionalAtWorkedExample) {
  const WorkedExample w;
  EXPECT_NEAR(excursion_constant(w.schedule, kU1, kV1, kTmin, w.model.coeffs),
              5.166659318739672, 1e-12);
  const BangBang bb = bangbang_G(w.schedule, kTmin, w.targets, w.model);
  const CumulativeForce G(CumulativePhase::G, bb.profile);
  EXPECT_NEAR(phase_two_functional(G, kTmin), -8.646105932590968, 1e-12);
  EXPECT_NEAR(excursion_constraint_rhs(w.schedule, kU1, kV1, kTmin, 32.261, G, w.model.coeffs),
              2.317734748669361, 1e-12);
}

TEST(TwoLevel, AreaExtremesAndAchievableRange) {
  const WorkedExample w;
  const FrictionParams& p = w.model.friction;
  const double a = burst_length_for(w.targets.H_end, kT1, p);
  EXPECT_NEAR(a, (0.991731818181818 - kT1) / 4.0, 1e-14);
  const Interval range = cumulative_area_range(w.targets.H_end, kT1, p);
  const TwoLevelPiece first{kT1, 0.0, a, 1.0, 5.0};
  const TwoLevelPiece last{kT1, kT1 - a, a, 1.0, 5.0};
  EXPECT_NEAR(first.end_value(), w.targets.H_end, 1e-14);
  EXPECT_NEAR(first.area(), range.hi, 1e-14);
  EXPECT_NEAR(last.area(), range.lo, 1e-14);
  const Interval ach = achievable_rhs(w.targets, w.schedule, p);
  EXPECT_NEAR(ach.lo, 0.1673390137293388, 1e-12);
  EXPECT_NEAR(ach.hi, 0.6044688545764461, 1e-12);
  EXPECT_THROW(burst_length_for(10.0, kT1, p), Error);
}

class Representatives : public ::testing::TestWithParam<Representative> {};

TEST_P(Representatives, MeetEveryTargetAndTheRequestedRhs) {
  const WorkedExample w;
  const FrictionParams& p = w.model.friction;
  const Interval ach = achievable_rhs(w.targets, w.schedule, p);
  for (double ratio : {0.0, 0.3, 0.77, 1.0}) {
    const double rhs = ach.at(ratio);
    const HISynthesis s = synthesize_HI(w.targets, w.schedule, p, rhs, GetParam());
    EXPECT_NEAR(s.phase1.end_value(), w.targets.H_end, 1e-13);
    EXPECT_NEAR(s.phase3.end_value(), w.targets.I_end, 1e-13);
    EXPECT_NEAR(s.phase3.area() - s.phase1.area(), rhs, 1e-12);
    EXPECT_TRUE(s.phase1.profile().admissible(p));
  }
  try {
    synthesize_HI(w.targets, w.schedule, p, ach.hi + 1e-6, GetParam());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleExcursion);
  }
}

INSTANTIATE_TEST_SUITE_P(All, Representatives,
                         ::testing::Values(Representative::Balanced,
                                           Representative::PhaseOneFirst,
                                           Representative::PhaseThreeFirst));

TEST(Representatives, NamesRoundTrip) {
  for (auto r : {Representative::Balanced, Representative::PhaseOneFirst,
                 Representative::PhaseThreeFirst}) {
    EXPECT_EQ(representative_from_string(to_string(r)), r);
  }
  EXPECT_THROW(representative_from_string("random"), Error);
}

}  // namespace
}  // namespace wormgait
