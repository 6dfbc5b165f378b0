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

#ifndef WORMGAIT_CONSTRAINTS_HPP
#define WORMGAIT_CONSTRAINTS_HPP

#include <string_view>

#include "wormgait/dynamics.hpp"
#include "wormgait/force_profile.hpp"
#include "wormgait/schedule.hpp"

namespace wormgait {

/**
 * @brief End values the running force integrals H, G and I must reach.
 *
 * H_end makes the head stop at t2, G_mid makes v vanish at t2 + Tmin,
 * G_end makes the tail stop at t3 and I_end gives v(t4) = -v1.
 */
struct BoundaryTargets {
  double H_end = 0.0;
  double G_mid = 0.0;
  double G_end = 0.0;
  double I_end = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Targets for (u1, v1) on the given schedule. Checks the H, I and whole-G
/// envelopes f_bw * len <= target <= f_u * len and throws
/// Error(InfeasibleTargets) naming the violated inequality.
BoundaryTargets boundary_targets(const GaitSchedule& s, double u1, double v1,
                                 const WormModel& model);

/// Same targets without envelope checks.
BoundaryTargets boundary_targets_unchecked(const GaitSchedule& s, double u1,
                                           double v1, const WormModel& model);

/// Envelopes of G on [0, Tmin] and [Tmin, T2]; throws like boundary_targets.
void check_phase_two_envelopes(const BoundaryTargets& targets,
                               const GaitSchedule& s, double tmin,
                               const FrictionParams& p);

/// Profile-independent part of the excursion, so that
/// E = 2 h + 2 (int I - int H) - 2 J.
double excursion_constant(const GaitSchedule& s, double u1, double v1,
                          double tmin, const DerivedCoefficients& c);

/// J = int_0^Tmin G - int_Tmin^T2 G.
double phase_two_functional(const CumulativeForce& G, double tmin);

/// Value that int I - int H must take for E(T) = L: L/2 - h + J.
double excursion_constraint_rhs(const GaitSchedule& s, double u1, double v1,
                                double tmin, double L, const CumulativeForce& G,
                                const DerivedCoefficients& c);

/// E predicted from the closed-form identity.
double predicted_excursion(double h, double area_H, double area_I, double J);

struct Excursion {
  double E = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  double d_min = 0.0;
  double d_max = 0.0;
};

/// Extremes of d over the trajectory, located at the zeros of v.
Excursion excursion(const Trajectory& traj);

/// Two-level piece on [0, length]: f_bw everywhere except one f_u burst.
struct TwoLevelPiece {
  double length = 0.0;
  double burst_start = 0.0;
  double burst_length = 0.0;
  double low = 0.0;
  double high = 0.0;

  ForceProfile profile() const;
  double end_value() const;
  /// Integral of the running integral over [0, length].
  double area() const;
};

/// Burst length that makes the running integral end at `end_value`.
/// Throws Error(InfeasibleTargets) if the target is outside the envelope.
double burst_length_for(double end_value, double length, const FrictionParams& p);

/// Range of int C over all admissible F with C(length) = end_value. Both
/// extremes are two-level: burst first (max) and burst last (min).
Interval cumulative_area_range(double end_value, double length,
                               const FrictionParams& p);

/// Range of int I - int H over all admissible phase-1/phase-3 pieces.
Interval achievable_rhs(const BoundaryTargets& targets, const GaitSchedule& s,
                        const FrictionParams& p);

enum class Representative { Balanced, PhaseOneFirst, PhaseThreeFirst };

const char* to_string(Representative r) noexcept;
Representative representative_from_string(std::string_view name);

struct HISynthesis {
  TwoLevelPiece phase1;
  TwoLevelPiece phase3;
  Interval achievable;
  double rhs = 0.0;
};

/// Picks burst positions so that H_end, I_end hold exactly and
/// int I - int H = rhs.
///  - Balanced: both bursts move together from their rhs-maximising corner.
///  - PhaseOneFirst: I stays burst-first; H absorbs the adjustment, then I.
///  - PhaseThreeFirst: H stays burst-last; I absorbs the adjustment, then H.
/// Throws Error(InfeasibleExcursion) when rhs lies outside the achievable
/// interval by more than `tol`; within tol it is clamped.
HISynthesis synthesize_HI(const BoundaryTargets& targets, const GaitSchedule& s,
                          const FrictionParams& p, double rhs,
                          Representative rep = Representative::Balanced,
                          double tol = 1e-12);

}  // namespace wormgait

#endif  // WORMGAIT_CONSTRAINTS_HPP
