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

#include "wormgait/constraints.hpp"

#include <cmath>
#include <string>

namespace wormgait {
namespace {

double envelope_tol(double x) { return 1e-12 * (1.0 + std::abs(x)); }

void check_envelope(const char* name, double target, double length,
                    const FrictionParams& p) {
  const double lo = p.backward * length;
  const double hi = p.actuator_max * length;
  const double tol = envelope_tol(hi);
  if (target < lo - tol) {
    throw Error(ErrorCode::InfeasibleTargets,
                std::string(name) + " = " + std::to_string(target) +
                    " < f_bw * len = " + std::to_string(lo));
  }
  if (target > hi + tol) {
    throw Error(ErrorCode::InfeasibleTargets,
                std::string(name) + " = " + std::to_string(target) +
                    " > f_u * len = " + std::to_string(hi));
  }
}

// Fraction in [0, 1] solving base - frac * span = goal; 0 for a flat span.
double fraction(double base, double span, double goal) {
  if (span <= 0.0) return 0.0;
  return std::clamp((base - goal) / span, 0.0, 1.0);
}

}  // namespace

BoundaryTargets boundary_targets_unchecked(const GaitSchedule& s, double u1,
                                           double v1, const WormModel& model) {
  const FrictionParams& p = model.friction;
  const DerivedCoefficients& c = model.coeffs;
  BoundaryTargets t;
  t.c1 = -(u1 + v1);
  t.c2 = 2.0 * u1 - p.forward * s.T2;
  t.c3 = -(u1 + v1) + s.period * p.forward / (1.0 + c.rho);
  t.H_end = -p.backward * s.T1 + t.c1;
  t.G_mid = c.beta * s.T1 + u1;
  t.G_end = 2.0 * c.beta * s.T1 + t.c2;
  t.I_end = -p.backward * s.T1 + t.c3;
  return t;
}

BoundaryTargets boundary_targets(const GaitSchedule& s, double u1, double v1,
                                 const WormModel& model) {
  const BoundaryTargets t = boundary_targets_unchecked(s, u1, v1, model);
  check_envelope("H(T1)", t.H_end, s.T1, model.friction);
  check_envelope("G(T2)", t.G_end, s.T2, model.friction);
  check_envelope("I(T3)", t.I_end, s.T3, model.friction);
  return t;
}

void check_phase_two_envelopes(const BoundaryTargets& targets,
                               const GaitSchedule& s, double tmin,
                               const FrictionParams& p) {
  check_envelope("G(Tmin)", targets.G_mid, tmin, p);
  check_envelope("G(T2) - G(Tmin)", targets.G_end - targets.G_mid,
                 s.T2 - tmin, p);
}

double excursion_constant(const GaitSchedule& s, double u1, double v1,
                          double tmin, const DerivedCoefficients& c) {
  const double f_fw = c.alpha - c.beta;
  const double g = c.beta * s.T1 + u1;
  const double v3 = g - f_fw * s.T2;
  return -v1 * s.T1 - 0.5 * c.alpha * s.T1 * s.T1 + g * (2.0 * tmin - s.T2) +
         v3 * s.T3 - 0.5 * c.alpha * s.T3 * s.T3;
}

double phase_two_functional(const CumulativeForce& G, double tmin) {
  return G.area(0.0, tmin) - G.area(tmin, G.length());
}

double excursion_constraint_rhs(const GaitSchedule& s, double u1, double v1,
                                double tmin, double L, const CumulativeForce& G,
                                const DerivedCoefficients& c) {
  return 0.5 * L - excursion_constant(s, u1, v1, tmin, c) +
         phase_two_functional(G, tmin);
}

double predicted_excursion(double h, double area_H, double area_I, double J) {
  return 2.0 * h + 2.0 * (area_I - area_H) - 2.0 * J;
}

Excursion excursion(const Trajectory& traj) {
  Excursion e;
  e.d_min = e.d_max = traj.first().d;
  e.t_min = e.t_max = traj.t_begin();
  auto consider = [&](double t, double d) {
    if (d < e.d_min) {
      e.d_min = d;
      e.t_min = t;
    }
    if (d > e.d_max) {
      e.d_max = d;
      e.t_max = t;
    }
  };
  for (double t : velocity_zero_times(traj)) consider(t, traj.state_at(t).d);
  consider(traj.t_end(), traj.last().d);
  e.E = e.d_max - e.d_min;
  return e;
}

ForceProfile TwoLevelPiece::profile() const {
  const double s1 = burst_start + burst_length;
  std::vector<Segment> segs;
  segs.push_back(Segment::constant(0.0, burst_start, low));
  segs.push_back(Segment::constant(burst_start, s1, high));
  segs.push_back(Segment::constant(s1, length, low));
  return ForceProfile(std::move(segs));
}

double TwoLevelPiece::end_value() const {
  return low * length + (high - low) * burst_length;
}

double TwoLevelPiece::area() const {
  return 0.5 * low * length * length +
         (high - low) * burst_length *
             (length - burst_start - 0.5 * burst_length);
}

double burst_length_for(double end_value, double length,
                        const FrictionParams& p) {
  check_envelope("running integral", end_value, length, p);
  const double gap = p.actuator_max - p.backward;
  if (gap <= 0.0) return 0.0;
  return std::clamp((end_value - p.backward * length) / gap, 0.0, length);
}

Interval cumulative_area_range(double end_value, double length,
                               const FrictionParams& p) {
  const double a = burst_length_for(end_value, length, p);
  TwoLevelPiece first{length, 0.0, a, p.backward, p.actuator_max};
  TwoLevelPiece last{length, length - a, a, p.backward, p.actuator_max};
  return {last.area(), first.area()};
}

Interval achievable_rhs(const BoundaryTargets& targets, const GaitSchedule& s,
                        const FrictionParams& p) {
  const Interval H = cumulative_area_range(targets.H_end, s.T1, p);
  const Interval I = cumulative_area_range(targets.I_end, s.T3, p);
  return {I.lo - H.hi, I.hi - H.lo};
}

const char* to_string(Representative r) noexcept {
  switch (r) {
    case Representative::Balanced: return "balanced";
    case Representative::PhaseOneFirst: return "phase_one_first";
    case Representative::PhaseThreeFirst: return "phase_three_first";
  }
  return "unknown";
}

Representative representative_from_string(std::string_view name) {
  if (name == "balanced") return Representative::Balanced;
  if (name == "phase_one_first") return Representative::PhaseOneFirst;
  if (name == "phase_three_first") return Representative::PhaseThreeFirst;
  throw Error(ErrorCode::InvalidArgument,
              "unknown representative '" + std::string(name) + "'");
}

HISynthesis synthesize_HI(const BoundaryTargets& targets, const GaitSchedule& s,
                          const FrictionParams& p, double rhs,
                          Representative rep, double tol) {
  HISynthesis out;
  out.achievable = achievable_rhs(targets, s, p);
  const Interval& A = out.achievable;
  const double slack = tol * (1.0 + std::abs(A.lo) + std::abs(A.hi));
  if (!A.contains(rhs, slack)) {
    throw Error(ErrorCode::InfeasibleExcursion,
                "required int I - int H = " + std::to_string(rhs) +
                    " outside achievable [" + std::to_string(A.lo) + ", " +
                    std::to_string(A.hi) + "]");
  }
  out.rhs = A.clamp(rhs);

  const double aH = burst_length_for(targets.H_end, s.T1, p);
  const double aI = burst_length_for(targets.I_end, s.T3, p);
  const Interval H = cumulative_area_range(targets.H_end, s.T1, p);
  const Interval I = cumulative_area_range(targets.I_end, s.T3, p);
  const double dH = H.width();
  const double dI = I.width();

  // lambda: H burst position (0 first, 1 last); mu: same for I.
  // rhs = I.hi - H.hi - mu * dI + lambda * dH.
  double lambda = 0.0;
  double mu = 0.0;
  switch (rep) {
    case Representative::Balanced: {
      const double theta = fraction(I.hi - H.lo, dH + dI, out.rhs);
      lambda = 1.0 - theta;
      mu = theta;
      break;
    }
    case Representative::PhaseOneFirst:
      lambda = dH > 0.0 ? std::clamp((out.rhs - I.hi + H.hi) / dH, 0.0, 1.0)
                        : 0.0;
      mu = fraction(I.hi - H.hi + lambda * dH, dI, out.rhs);
      break;
    case Representative::PhaseThreeFirst:
      lambda = 1.0;
      mu = fraction(I.hi - H.lo, dI, out.rhs);
      lambda = dH > 0.0
                   ? std::clamp((out.rhs - I.hi + mu * dI + H.hi) / dH, 0.0, 1.0)
                   : 1.0;
      break;
  }
  out.phase1 = {s.T1, lambda * (s.T1 - aH), aH, p.backward, p.actuator_max};
  out.phase3 = {s.T3, mu * (s.T3 - aI), aI, p.backward, p.actuator_max};
  return out;
}

}  // namespace wormgait
