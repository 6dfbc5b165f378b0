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

#include "wormgait/schedule.hpp"

namespace wormgait {
namespace {

// Reference values from an independent floating-point evaluation of the
// schedule and region formulas at (T1r, Tminr) = (0.363635, 0.563214).
constexpr double kT1 = 0.3305772727272727;
constexpr double kT2 = 4.090909090909091;
constexpr double kT3 = 0.5785136363636363;
constexpr double kU1 = 3.737603863636364;
constexpr double kV1 = -5.059912954545455;

const WormModel& section_model() {
  static const WormModel m = WormModel::make(FrictionParams{});
  return m;
}

TEST(Schedule, WorkedExampleDurations) {
  const DerivedCoefficients& c = section_model().coeffs;
  EXPECT_NEAR(phase_one_limit(10.0, c), 0.9090909090909091, 1e-15);
  const GaitSchedule s = build_schedule(10.0, 0.363635 * phase_one_limit(10.0, c), c);
  EXPECT_NEAR(s.T1, kT1, 1e-15);
  EXPECT_NEAR(s.T2, kT2, 1e-14);
  EXPECT_NEAR(s.T3, kT3, 1e-14);
  EXPECT_NEAR(s.T1 + s.T2 + s.T3, 5.0, 1e-14);
  EXPECT_NEAR(u_closure_residual(s, c), 0.0, 1e-14);
  const auto starts = s.phase_starts();
  EXPECT_DOUBLE_EQ(starts.front(), 0.0);
  EXPECT_NEAR(starts[3], 5.0, 1e-14);
  EXPECT_NEAR(starts[6], 10.0, 1e-14);
}

TEST(Schedule, PrintedPhaseTwoDurationBreaksClosure) {
  const DerivedCoefficients& c = section_model().coeffs;
  const GaitSchedule p = printed_phase_two_schedule(10.0, kT1, c);
  EXPECT_NEAR(p.T2, 5.0 * 1.1 / 0.9, 1e-14);
  EXPECT_GT(std::abs(u_closure_residual(p, c)), 0.1);
}

TEST(Schedule, RejectsOutOfRangePhaseOne) {
  const DerivedCoefficients& c = section_model().coeffs;
  EXPECT_THROW(build_schedule(10.0, 0.0, c), Error);
  EXPECT_THROW(build_schedule(10.0, 0.95, c), Error);
  EXPECT_THROW(build_schedule(0.0, 0.1, c), Error);
  EXPECT_THROW(build_schedule(10.0, 0.1, derive_coefficients({1.0, 1.0, 1.0, 5.0})), Error);
  EXPECT_GT(clamp_phase_one(10.0, 0.0, c), 0.0);
  EXPECT_LT(clamp_phase_one(10.0, 1.0, c), phase_one_limit(10.0, c));
}

TEST(FeasibleRegion, WorkedExampleBounds) {
  const WormModel& m = section_model();
  const FeasibleRegion r = feasible_region(build_schedule(10.0, kT1, m.coeffs), m);
  EXPECT_FALSE(r.empty());
  EXPECT_NEAR(r.u1.lo, 2.1012402272727275, 1e-13);
  EXPECT_NEAR(r.u1.hi, 10.28305840909091, 1e-13);
  EXPECT_DOUBLE_EQ(r.K, 6.0);
  const InitialConditions ic = select_initial_conditions(r, 0.2, 0.5);
  EXPECT_NEAR(ic.u1, kU1, 1e-13);
  EXPECT_NEAR(ic.v1, kV1, 1e-13);
  EXPECT_NEAR(r.v1(ic.u1).lo, -5.7210675, 1e-13);
  EXPECT_NEAR(r.v1(ic.u1).hi, -4.3987584090909095, 1e-13);
  EXPECT_NEAR(ic.gamma, 0.7772727272727274, 1e-14);
  EXPECT_NEAR(ic.tmin.lo, 0.7772727272727274, 1e-13);
  EXPECT_NEAR(ic.tmin.hi, 3.3954545454545455, 1e-13);
}

TEST(FeasibleRegion, EmptyWhenKDropsBelowTwo) {
  const WormModel& m = section_model();
  // Near the phase-one limit T3 -> 0 and (eta - 1) T3 / T1 - 1 < 2.
  const FeasibleRegion r = feasible_region(build_schedule(10.0, 0.9, m.coeffs), m);
  EXPECT_LT(r.K, 2.0);
  EXPECT_TRUE(r.empty());
  EXPECT_THROW(select_initial_conditions(r, 0.2, 0.5), Error);
}

// Closed orbit under F = 5 with f_bw = 2, f_fw = 1 through v1 = -3; the
// closing u1 = 27/23 was solved independently in exact rational arithmetic.
TEST(ConstantForceOrbit, ClosesAtTheRationalSolution) {
  const WormModel m = WormModel::make(FrictionParams{1.0, 2.0, 2.0, 5.0});
  const ConstantForceOrbit o = constant_force_orbit(5.0, -3.0, 10.0, m);
  EXPECT_NEAR(o.init.u, 27.0 / 23.0, 1e-14);
  EXPECT_NEAR(o.schedule.T1, 6.0 / 23.0, 1e-14);
  EXPECT_NEAR(o.schedule.T2, 10.0 / 23.0, 1e-14);
  EXPECT_NEAR(o.schedule.T3, 14.0 / 23.0, 1e-14);
  EXPECT_NEAR(o.schedule.period, 60.0 / 23.0, 1e-14);
  EXPECT_THROW(constant_force_orbit(1.5, -3.0, 10.0, m), Error);
}

}  // namespace
}  // namespace wormgait
