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

#include "wormgait/oracle.hpp"
#include "wormgait/validation.hpp"

namespace wormgait {
namespace {

GaitDesign worked_design() {
  ProblemSetup s;
  s.enforce_excursion = false;
  return design_gait_relative(s, 0.363635, 0.563214);
}

TEST(Oracle, OptionsScaleWithPeriod) {
  const OracleOptions o = OracleOptions::for_period(10.0);
  EXPECT_DOUBLE_EQ(o.step, 1e-4);
  EXPECT_LE(o.event_tol, 1e-10 * 10.0);
  EXPECT_LE(o.stick_threshold, 1e-9);
}

// A resting body pushed by exactly f_0 = f_bw breaks away.
TEST(Oracle, BreaksAwayAtExactlyStaticFriction) {
  const FrictionParams p{0.1, 1.0, 1.0, 5.0};
  const WormState rest{0.0, 0.0, 10.0, 0.0, 0.0};
  const OracleTrajectory o =
      integrate_ode(ForceProfile::constant(1.0, 1.0), rest, 0.0, 0.5, p, OracleOptions{});
  EXPECT_GT(o.final_state().x2dot, 0.0);
  EXPECT_NEAR(o.final_state().x2dot, 0.5 * (1.0 - 0.1), 1e-12);
}

TEST(Oracle, SticksBelowStaticFriction) {
  const FrictionParams p{0.1, 1.0, 1.0, 5.0};
  const WormState rest{0.0, 0.0, 10.0, 0.0, 0.0};
  const OracleTrajectory o =
      integrate_ode(ForceProfile::constant(0.8, 1.0), rest, 0.0, 0.5, p, OracleOptions{});
  EXPECT_EQ(o.final_state().x1dot, 0.0);
  EXPECT_EQ(o.final_state().x2dot, 0.0);
  EXPECT_EQ(o.final_state().x2, 10.0);
  EXPECT_EQ(o.dissipation, 0.0);
}

TEST(Oracle, RejectsBadOptions) {
  const FrictionParams p;
  OracleOptions bad;
  bad.step = 0.0;
  EXPECT_THROW(integrate_ode(ForceProfile::constant(1.0, 1.0), WormState{}, 0.0, 1.0, p, bad),
               Error);
}

TEST(Oracle, SelfConvergesAndDissipates) {
  const GaitDesign g = worked_design();
  const Trajectory t = simulate_period(g.schedule, g.profile, g.init,
                                       WormModel::make(FrictionParams{}));
  EXPECT_LT(oracle_self_convergence(t, OracleOptions::for_period(10.0)), 1e-8);
  const OracleComparison c = compare_with_oracle(t, OracleOptions::for_period(10.0));
  EXPECT_GE(c.min_interval_dissipation, 0.0);
  EXPECT_LT(c.max_state_error, 1e-6);
  EXPECT_LT(c.event_time_error, 1e-6);
  EXPECT_EQ(c.oracle_events, c.closed_form_events);
}

TEST(RandomProfiles, MeetTargetsAndAreDeterministic) {
  const GaitDesign g = worked_design();
  const FrictionParams p;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ForceProfile G = random_admissible_profile(g.targets, g.schedule, g.tmin, p, seed);
    EXPECT_TRUE(G.admissible(p));
    EXPECT_NEAR(G.integral(0.0, g.tmin), g.targets.G_mid, 1e-12);
    EXPECT_NEAR(G.integral(0.0, g.schedule.T2), g.targets.G_end, 1e-12);
    EXPECT_EQ(G, random_admissible_profile(g.targets, g.schedule, g.tmin, p, seed));
  }
}

TEST(RandomProfiles, BangBangDominates) {
  const GaitDesign g = worked_design();
  const Dominance d = pontryagin_dominance(g, FrictionParams{}, 200, 7, 8);
  EXPECT_EQ(d.violations, 0u);
  EXPECT_GE(d.J_random_min, d.J_bang - 1e-12);
  EXPECT_GE(d.J_brute, d.J_bang - 1e-12);
  EXPECT_NEAR(d.J_aligned, d.J_bang, 1e-12);
}

TEST(BruteForce, FinerNestedGridsNeverGetWorse) {
  const GaitDesign g = worked_design();
  const FrictionParams p;
  const double J4 = brute_force_optimal_G(g.targets, g.schedule, g.tmin, p, 4).J;
  const double J8 = brute_force_optimal_G(g.targets, g.schedule, g.tmin, p, 8).J;
  const double J16 = brute_force_optimal_G(g.targets, g.schedule, g.tmin, p, 16).J;
  EXPECT_LE(J8, J4 + 1e-12);
  EXPECT_LE(J16, J8 + 1e-12);
  EXPECT_THROW(brute_force_optimal_G(g.targets, g.schedule, g.tmin, p, 17), Error);
}

TEST(RandomDraws, ReachableExcursionIsMetExactly) {
  for (std::uint64_t seed = 100; seed < 105; ++seed) {
    const RandomDraw d = random_feasible_draw(seed, true);
    EXPECT_TRUE(d.design.excursion_met);
    EXPECT_NEAR(d.design.E_predicted, d.setup.L, 1e-9 * (1.0 + d.setup.L));
    EXPECT_EQ(random_feasible_draw(seed, true).setup.L, d.setup.L);
  }
}

}  // namespace
}  // namespace wormgait
