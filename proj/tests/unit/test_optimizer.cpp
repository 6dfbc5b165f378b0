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

#include "wormgait/optimizer.hpp"

namespace wormgait {
namespace {

ProblemSetup relaxed_setup() {
  ProblemSetup s;
  s.enforce_excursion = false;
  return s;
}

TEST(BangBang, SwitchTimesAtWorkedExample) {
  const GaitDesign g = design_gait_relative(relaxed_setup(), 0.363635, 0.563214);
  EXPECT_NEAR(g.tmin, 2.251869381818182, 1e-13);
  EXPECT_NEAR(g.bang.params.tau1, 1.8432458181818183, 1e-13);
  EXPECT_NEAR(g.bang.params.tau2, 0.4095582545454548, 1e-13);
  const ForceProfile& f = g.bang.profile;
  EXPECT_DOUBLE_EQ(f.value(0.5 * g.bang.params.tau1), 1.0);
  EXPECT_DOUBLE_EQ(f.value(g.tmin), 5.0);
  EXPECT_DOUBLE_EQ(f.value(g.schedule.T2 - 1e-3), 1.0);
  EXPECT_NEAR(f.integral(0.0, g.tmin), g.targets.G_mid, 1e-12);
  EXPECT_NEAR(f.integral(0.0, g.schedule.T2), g.targets.G_end, 1e-12);
  const auto [p1, p2] = costates(g.bang.params, g.schedule, g.tmin);
  EXPECT_EQ(p1.zero_count(), 1);
  EXPECT_EQ(p2.zero_count(), 1);
}

TEST(BangBang, NoAuthorityWithoutActuatorHeadroom) {
  ProblemSetup s = relaxed_setup();
  s.model = WormModel::make(FrictionParams{0.1, 1.0, 1.0, 1.0});
  const GaitSchedule sched = build_schedule(10.0, 0.3, s.model.coeffs);
  try {
    bangbang_G(sched, 1.0, BoundaryTargets{}, s.model);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoControlAuthority);
  }
}

TEST(Design, StrictExcursionIsUnreachableAtWorkedExample) {
  ProblemSetup s;
  try {
    design_gait_relative(s, 0.363635, 0.563214);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleExcursion);
  }
  const CellResult c = evaluate_cell(s, 0.363635, 0.563214);
  EXPECT_EQ(c.status, CellStatus::ExcursionUnreachable);
  EXPECT_GT(c.rhs, c.achievable.hi);
}

TEST(Design, ObjectiveIsFlatAlongPhaseOne) {
  const ProblemSetup s = relaxed_setup();
  const double ref = design_gait_relative(s, 0.5, 0.4).P_u;
  for (double r : {0.05, 0.2, 0.55}) {
    EXPECT_NEAR(design_gait_relative(s, r, 0.4).P_u, ref, 1e-14);
  }
}

TEST(TminOptimum, QuadraticRefinementMatchesTheScan) {
  const ProblemSetup s = relaxed_setup();
  const double T1 = phase_one_from_ratio(s, 0.363635);
  const TminOptimum o = optimize_tmin(s, T1, 2000);
  EXPECT_NEAR(o.tminr, 0.5625, 1e-9);
  EXPECT_NEAR(o.P_u, 0.01756735802469, 1e-13);
  EXPECT_LE(o.P_u, o.scan_P_u + 1e-15);
  EXPECT_NEAR(o.scan_tmin, o.tmin, o.window.width() / 1000.0);
}

TEST(Sweep, FlatRidgeCountsAsInteriorMinimum) {
  const ProblemSetup s = relaxed_setup();
  const SweepResult r = sweep(s, SweepOptions{21, 21, 2});
  EXPECT_GT(r.feasible_count, 0u);
  EXPECT_TRUE(r.interior_minimum());
  // The grid cell can land just off the reference tminr; the refined point cannot.
  EXPECT_LE(r.refined.P_u, design_gait_relative(s, 0.363635, 0.563214).P_u);
  EXPECT_LE(r.refined.P_u, r.best().P_u);
  EXPECT_EQ(r.v_ratio_sensitivity.size(), 5u);
}

TEST(Sweep, ThreadCountDoesNotChangeTheResult) {
  const ProblemSetup s = relaxed_setup();
  const SweepResult a = sweep(s, SweepOptions{15, 17, 1});
  const SweepResult b = sweep(s, SweepOptions{15, 17, 3});
  ASSERT_EQ(a.cells.size(), b.cells.size());
  EXPECT_EQ(a.argmin, b.argmin);
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    EXPECT_EQ(a.cells[k].status, b.cells[k].status);
    EXPECT_EQ(a.cells[k].P_u, b.cells[k].P_u);
  }
}

TEST(Sweep, StrictWorkedExampleHasNoFeasibleCell) {
  try {
    sweep(ProblemSetup{}, SweepOptions{11, 11, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllCellsInfeasible);
  }
}

TEST(Velocity, MaximisedAtThePhaseOneLimit) {
  const DerivedCoefficients c = derive_coefficients(FrictionParams{});
  EXPECT_NEAR(phase_one_limit(10.0, c), 10.0 * 0.1 / 1.1, 1e-15);
  // Clamped just inside the open interval.
  EXPECT_LT(max_velocity_T1(10.0, c), phase_one_limit(10.0, c));
  EXPECT_NEAR(max_velocity_T1(10.0, c), 10.0 * 0.1 / 1.1, 1e-7);
}

}  // namespace
}  // namespace wormgait
