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

#include "wormgait/dynamics.hpp"
#include "wormgait/optimizer.hpp"
#include "wormgait/oracle.hpp"

namespace wormgait {
namespace {

WormModel constant_force_model() { return WormModel::make(FrictionParams{1.0, 2.0, 2.0, 5.0}); }

Trajectory constant_force_trajectory() {
  const WormModel m = constant_force_model();
  const ConstantForceOrbit o = constant_force_orbit(5.0, -3.0, 10.0, m);
  return simulate_period(o.schedule, ForceProfile::constant(5.0, o.schedule.half_period()),
                         o.init, m);
}

TEST(PropagateMode, MatchesDirectIntegration) {
  const WormModel m = WormModel::make(FrictionParams{0.2, 1.0, 1.0, 6.0});
  const ForceProfile f({Segment::affine(0.0, 2.0, 1.5, 5.0)});
  const ConfigState start{0.0, 12.0, -4.0, 3.0};
  const ConfigState end = propagate_mode(1, start, f, 0.25, 0.5, m);
  // Case 1 with constant rates reduces to a lag integral; check by RK4.
  const ModeRates r = mode_rates(1, m);
  double v = start.v, d = start.d;
  const int n = 20000;
  const double h = 0.5 / n;
  for (int k = 0; k < n; ++k) {
    const double t = 0.25 + k * h;
    auto dv = [&](double s) { return r.force_coeff * f.value(s) + r.v_offset; };
    const double k1 = dv(t), k2 = dv(t + h / 2), k4 = dv(t + h);
    d += 2.0 * h * (v + h * (k1 + 2 * k2) / 6.0);
    v += h * (k1 + 4 * k2 + k4) / 6.0;
  }
  EXPECT_NEAR(end.v, v, 1e-12);
  EXPECT_NEAR(end.d, d, 1e-10);
  EXPECT_NEAR(end.u, start.u + r.u_rate * 0.5, 1e-15);
}

TEST(PropagateMode, RejectsForcesBelowStaticFriction) {
  const WormModel m = WormModel::make(FrictionParams{});
  const ConfigState s{0.0, 10.0, -1.0, 1.0};
  EXPECT_THROW(propagate_mode(1, s, ForceProfile::constant(0.5, 1.0), 0.0, 1.0, m), Error);
  EXPECT_THROW(propagate_mode(7, s, ForceProfile::constant(2.0, 1.0), 0.0, 1.0, m), Error);
}

TEST(FindEventTime, AnalyticRootOnConstantForce) {
  const WormModel m = constant_force_model();
  // Case 1: head velocity u + v rises at F + f_bw... solved in closed form.
  const ConfigState s{0.0, 10.0, -3.0, 27.0 / 23.0};
  const EventHit hit = find_event_time(1, s, ForceProfile::constant(5.0, 2.0), 0.0, m);
  EXPECT_EQ(hit.body, Body::Head);
  EXPECT_NEAR(hit.duration, 6.0 / 23.0, 1e-14);
  EXPECT_THROW(find_event_time(1, s, ForceProfile::constant(5.0, 0.1), 0.0, m), Error);
}

TEST(Simulate, ConstantForceOrbitClosesAndFollowsTheSchedule) {
  const Trajectory t = constant_force_trajectory();
  ASSERT_EQ(t.phases().size(), 6u);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(t.phases()[k].case_id, k + 1);
  EXPECT_LT(verify_periodicity(t).max_abs(), 1e-12);
  EXPECT_LT(half_period_residuals(t).max_abs(), 1e-12);
  EXPECT_LT(t.schedule_mismatch(), 1e-12);
  EXPECT_EQ(t.event_times().size(), 4u);
  EXPECT_NEAR(t.t_end(), 60.0 / 23.0, 1e-14);
}

TEST(Simulate, ClosedFormAgreesWithTheOracle) {
  const Trajectory t = constant_force_trajectory();
  const double T = t.t_end();
  const OracleTrajectory o = integrate_ode(t.profile(), t.world_state_at(0.0, 0.0), 0.0, T,
                                           t.model().friction, OracleOptions::for_period(T));
  double worst = 0.0;
  for (const OracleNode& n : o.nodes) {
    const ConfigState a = to_config(n.state);
    const ConfigState b = t.state_at(std::min(n.t, T));
    worst = std::max({worst, std::abs(a.d - b.d), std::abs(a.v - b.v), std::abs(a.u - b.u)});
  }
  EXPECT_LT(worst, 1e-6);
  const std::vector<double> cf = t.event_times();
  ASSERT_EQ(o.events.size(), cf.size());
  for (std::size_t i = 0; i < cf.size(); ++i) EXPECT_NEAR(o.events[i].t, cf[i], 1e-6);
}

TEST(Simulate, WrongInitialStateIsAModeSequenceError) {
  const WormModel m = constant_force_model();
  const ConstantForceOrbit o = constant_force_orbit(5.0, -3.0, 10.0, m);
  ConfigState bad = o.init;
  bad.u += 0.5;
  try {
    simulate_period(o.schedule, ForceProfile::constant(5.0, o.schedule.half_period()), bad, m);
    FAIL() << "expected a schedule mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModeSequence);
  }
}

TEST(Trajectory, QueriesAreConsistent) {
  const Trajectory t = constant_force_trajectory();
  const double half = 0.5 * t.t_end();
  for (double s : {0.1, 0.5, 0.9, 1.2}) {
    EXPECT_DOUBLE_EQ(t.force_at(s + half), -t.force_at(s));
    const ConfigState a = t.state_at(s);
    const ConfigState b = t.state_at(s + half);
    EXPECT_NEAR(a.v, -b.v, 1e-12);
    EXPECT_NEAR(a.u, b.u, 1e-12);
  }
  const auto samples = t.samples(10);
  ASSERT_EQ(samples.size(), 11u);
  EXPECT_NEAR(samples.back().v, samples.front().v, 1e-12);
  const WormState w = t.world_state_at(t.t_end(), 0.0);
  EXPECT_NEAR(0.5 * (w.x1 + w.x2) - 0.5 * t.first().d, t.com_displacement(t.t_end()), 1e-12);
  for (double z : velocity_zero_times(t)) EXPECT_NEAR(t.state_at(z).v, 0.0, 1e-10);
}

}  // namespace
}  // namespace wormgait
