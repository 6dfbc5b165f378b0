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
#include "wormgait/performance.hpp"

namespace wormgait {
namespace {

struct Relaxed {
  ProblemSetup setup = [] {
    ProblemSetup s;
    s.enforce_excursion = false;
    return s;
  }();
  GaitDesign design = design_gait_relative(setup, 0.363635, 0.563214);
  Trajectory traj = simulate_period(design.schedule, design.profile, design.init, setup.model);
};

TEST(Performance, DistanceMatchesClosedFormAndSimulation) {
  const Relaxed r;
  EXPECT_NEAR(r.design.dv.X, 36.81818181818183, 1e-12);
  EXPECT_NEAR(r.design.dv.V, 3.681818181818183, 1e-13);
  EXPECT_NEAR(r.traj.com_displacement(r.traj.t_end()), r.design.dv.X, 1e-10);
}

TEST(Performance, WorkedExampleObjective) {
  const Relaxed r;
  // Nominal-L objective from the independent reference evaluation.
  EXPECT_NEAR(r.design.P_u, 0.017567371075468945, 1e-14);
  EXPECT_LT(r.design.P_u_realized, r.design.P_u);
}

TEST(Performance, PhaseWorkAgreesWithQuadrature) {
  const Relaxed r;
  const auto q = phase_work_quadrature(r.traj);
  EXPECT_NEAR(q[0], r.design.work.W1, 1e-10);
  EXPECT_NEAR(q[1], r.design.work.W2, 1e-10);
  EXPECT_NEAR(q[2], r.design.work.W3, 1e-10);
  // Second half mirrors the first.
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(q[i + 3], q[i], 1e-10);
  const PowerResult p = power_direct(r.traj);
  EXPECT_NEAR(p.W, r.design.work.W_total, 1e-9);
  EXPECT_NEAR(p.P_u, r.design.P_u_realized, 1e-12);
}

TEST(Performance, SubstitutedWorkUsesTheExcursion) {
  const Relaxed r;
  const DerivedCoefficients& c = r.setup.model.coeffs;
  const double E = excursion(r.traj).E;
  EXPECT_NEAR(substituted_total_work(r.design.work, E, r.design.h, r.design.J, c),
              r.design.work.W_total, 1e-11);
  EXPECT_NEAR(E, r.design.E_predicted, 1e-11);
}

TEST(Performance, EnergyBalancesPerPhase) {
  const Relaxed r;
  for (const EnergyBalance& e : energy_balance(r.traj)) {
    EXPECT_GE(e.dissipation, 0.0);
    EXPECT_NEAR(e.residual, 0.0, 1e-10);
  }
}

TEST(Performance, ReportCollectsTheMeasurements) {
  const Relaxed r;
  const PerformanceReport rep = measure_performance(r.traj);
  EXPECT_NEAR(rep.V, r.design.dv.V, 1e-10);
  EXPECT_NEAR(rep.t_max - rep.t_min, 5.0, 1e-9);
  EXPECT_NEAR(rep.E, 28.834468211814176, 1e-9);
}

}  // namespace
}  // namespace wormgait
