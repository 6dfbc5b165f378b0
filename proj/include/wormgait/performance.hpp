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

#ifndef WORMGAIT_PERFORMANCE_HPP
#define WORMGAIT_PERFORMANCE_HPP

#include <array>

#include "wormgait/constraints.hpp"
#include "wormgait/dynamics.hpp"

namespace wormgait {

struct DistanceVelocity {
  double X = 0.0;
  double V = 0.0;
};

/// X = T (u1 + beta T1 - T f_fw beta / (4 alpha)), V = X / T. Depends only
/// on the schedule and u1, never on the force shape.
DistanceVelocity distance_and_velocity(const GaitSchedule& s, double u1,
                                       const DerivedCoefficients& c);

/// Half-period work terms. Power uses the signed force times v, so the
/// second half repeats the first and W_total = 2 (W1 + W2 + W3).
struct WorkTerms {
  double W1_const = 0.0;
  double W2_const = 0.0;
  double W3_const = 0.0;
  double W1 = 0.0;
  double W2 = 0.0;
  double W3 = 0.0;
  double W_const = 0.0;
  double W_total = 0.0;
};

/// W1 = H_end^2/2 + H_end (alpha T1 + v1) - alpha int H
/// W2 = G_end^2/2 - (beta T1 + u1) G_end
/// W3 = I_end^2/2 - (I_end + v1) I_end + alpha int I
WorkTerms work_decomposition(const BoundaryTargets& targets,
                             const GaitSchedule& s, double u1, double v1,
                             double area_H, double area_I,
                             const DerivedCoefficients& c);

/// W_total after eliminating int I - int H with E = L:
/// 2 W_const + alpha L - 2 alpha h + 2 alpha J.
double substituted_total_work(const WorkTerms& w, double L, double h, double J,
                              const DerivedCoefficients& c);

/// Quadrature of f v over each of the six mode intervals.
std::array<double, 6> phase_work_quadrature(const Trajectory& traj,
                                            double abs_tol = 1e-10);

struct PowerResult {
  double W = 0.0;
  double X = 0.0;
  double P = 0.0;
  double P_u = 0.0;
};

/// P = (1/T) int f v dt by quadrature, X = int u dt from the trajectory,
/// P_u = P / X. Throws Error(InvalidArgument) when X <= 0.
PowerResult power_direct(const Trajectory& traj, double abs_tol = 1e-10);

/// Kinetic energy bookkeeping per mode: KE = (x1dot^2 + x2dot^2)/2 = u^2 +
/// v^2 changes by 2 int f v (the actuator acts on both bodies) minus the
/// friction dissipation.
struct EnergyBalance {
  double delta_ke = 0.0;
  double actuator_work = 0.0;  // 2 int f v
  double dissipation = 0.0;    // >= 0
  double residual = 0.0;       // delta_ke - actuator_work + dissipation
};

std::array<EnergyBalance, 6> energy_balance(const Trajectory& traj);

struct PerformanceReport {
  double X = 0.0;
  double V = 0.0;
  double P = 0.0;
  double P_u = 0.0;
  double W1 = 0.0;
  double W2 = 0.0;
  double W3 = 0.0;
  double W_total = 0.0;
  double E = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
};

/// Everything measured directly on the trajectory (quadrature and extrema).
PerformanceReport measure_performance(const Trajectory& traj);

}  // namespace wormgait

#endif  // WORMGAIT_PERFORMANCE_HPP
