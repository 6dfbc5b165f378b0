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

#ifndef WORMGAIT_SCHEDULE_HPP
#define WORMGAIT_SCHEDULE_HPP

#include <array>

#include "wormgait/model.hpp"

namespace wormgait {

/**
 * @brief Phase timing of one gait period.
 *
 * The force is positive for phases 1-3 and negative for phases 4-6; the
 * second half repeats the first half's durations.
 */
struct GaitSchedule {
  double period = 0.0;
  double start = 0.0;  // t1
  double T1 = 0.0;
  double T2 = 0.0;
  double T3 = 0.0;

  double half_period() const { return 0.5 * period; }
  std::array<double, 6> durations() const { return {T1, T2, T3, T1, T2, T3}; }

  /// t1 .. t7, where t7 = t1 + period.
  std::array<double, 7> phase_starts() const;
};

/// Supremum of the admissible phase-one duration, T * rho / (1 + rho).
double phase_one_limit(double period, const DerivedCoefficients& c);

/// Keeps T1 inside [eps, limit - eps] with eps = 1e-9 * T.
double clamp_phase_one(double period, double T1, const DerivedCoefficients& c);

/// T2 = (T/2)(1 - rho)/(1 + rho), T3 = (T/2)(2 rho/(1 + rho)) - T1.
/// Throws Error(InvalidArgument) for rho = 1, T <= 0 or T1 outside
/// (0, phase_one_limit).
GaitSchedule build_schedule(double period, double T1,
                            const DerivedCoefficients& c, double start = 0.0);

/// Diagnostic only: the phase-two duration exactly as printed in the source
/// text, T2 = (T/2)(1 + rho)/(1 - rho), with T3 from the same relation as
/// build_schedule. The phases no longer add up to T/2 and the centre of mass
/// velocity does not close.
GaitSchedule printed_phase_two_schedule(double period, double T1,
                                        const DerivedCoefficients& c);

/// Per-period change of u implied by the phase durations:
/// 2 (beta (T1 + T3) - f_fw T2). Zero for every build_schedule result.
double u_closure_residual(const GaitSchedule& s, const DerivedCoefficients& c);

/**
 * @brief Necessary conditions on (u1, v1, Tmin) for one (T, T1).
 *
 * u1 range and K are fixed by the schedule; the v1 interval and the Tmin
 * window depend on the chosen u1.
 */
struct FeasibleRegion {
  GaitSchedule schedule;
  FrictionParams friction;
  DerivedCoefficients coeffs;
  Interval u1;
  Interval t1;  // open phase-one interval, clamped by eps
  double K = 0.0;

  /// [-K f_bw T1 - u1, -2 f_bw T1 - u1].
  Interval v1(double u1_value) const;

  /// (beta T1 + u1) / f_u.
  double gamma(double u1_value) const;

  /// [max{gamma, T2(1+rho) - gamma eta}, min{gamma eta, T2(1+rho/eta) - gamma}]
  /// intersected with [0, T2].
  Interval tmin(double u1_value) const;

  /// True when the u1 or v1 interval is empty.
  bool empty() const;
};

FeasibleRegion feasible_region(const GaitSchedule& s, const WormModel& model);

/// Chosen gait start point with its Tmin window.
struct InitialConditions {
  double u1 = 0.0;
  double v1 = 0.0;
  double gamma = 0.0;
  Interval tmin;
};

/// u1 = lerp(u1 bounds, u_ratio); v1 = lerp(v1 bounds at u1, v_ratio).
/// Throws Error(EmptyRegion) when the region or the Tmin window is empty.
InitialConditions select_initial_conditions(const FeasibleRegion& region,
                                            double u_ratio, double v_ratio);

/// Constant-force periodic orbit through (v1, d1): solves the centre of mass
/// velocity u1 and phase durations that close the orbit under F. The force
/// must exceed f_bw. Throws Error(InfeasibleTargets) when no orbit exists.
struct ConstantForceOrbit {
  GaitSchedule schedule;
  ConfigState init;
  double force = 0.0;
};

ConstantForceOrbit constant_force_orbit(double force, double v1, double d1,
                                        const WormModel& model);

}  // namespace wormgait

#endif  // WORMGAIT_SCHEDULE_HPP
