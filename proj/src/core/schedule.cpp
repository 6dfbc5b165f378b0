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

#include "wormgait/schedule.hpp"

#include <cmath>
#include <string>

namespace wormgait {
namespace {

constexpr double kPhaseEps = 1e-9;

void check_period(double period, const DerivedCoefficients& c) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw Error(ErrorCode::InvalidArgument, "period must be positive");
  }
  if (!(c.rho > 0.0) || c.rho >= 1.0) {
    throw Error(ErrorCode::InvalidArgument,
                "rho must lie in (0, 1); rho = 1 leaves no phase-two time");
  }
}

}  // namespace

std::array<double, 7> GaitSchedule::phase_starts() const {
  std::array<double, 7> t{};
  t[0] = start;
  const auto d = durations();
  for (std::size_t i = 0; i < 6; ++i) t[i + 1] = t[i] + d[i];
  t[3] = start + half_period();
  t[6] = start + period;
  return t;
}

double phase_one_limit(double period, const DerivedCoefficients& c) {
  return period * c.rho / (1.0 + c.rho);
}

double clamp_phase_one(double period, double T1, const DerivedCoefficients& c) {
  const double eps = kPhaseEps * period;
  return std::clamp(T1, eps, phase_one_limit(period, c) - eps);
}

GaitSchedule build_schedule(double period, double T1,
                            const DerivedCoefficients& c, double start) {
  check_period(period, c);
  const double limit = phase_one_limit(period, c);
  if (!(T1 > 0.0) || !(T1 < limit)) {
    throw Error(ErrorCode::InvalidArgument,
                "T1 = " + std::to_string(T1) + " outside (0, " +
                    std::to_string(limit) + ")");
  }
  GaitSchedule s;
  s.period = period;
  s.start = start;
  s.T1 = T1;
  s.T2 = 0.5 * period * (1.0 - c.rho) / (1.0 + c.rho);
  s.T3 = 0.5 * period * (2.0 * c.rho / (1.0 + c.rho)) - T1;
  return s;
}

GaitSchedule printed_phase_two_schedule(double period, double T1,
                                        const DerivedCoefficients& c) {
  GaitSchedule s = build_schedule(period, T1, c);
  s.T2 = 0.5 * period * (1.0 + c.rho) / (1.0 - c.rho);
  return s;
}

double u_closure_residual(const GaitSchedule& s, const DerivedCoefficients& c) {
  const double f_fw = c.alpha - c.beta;
  return 2.0 * (c.beta * (s.T1 + s.T3) - f_fw * s.T2);
}

Interval FeasibleRegion::v1(double u1_value) const {
  const double fT1 = friction.backward * schedule.T1;
  return {-K * fT1 - u1_value, -2.0 * fT1 - u1_value};
}

double FeasibleRegion::gamma(double u1_value) const {
  return (coeffs.beta * schedule.T1 + u1_value) / friction.actuator_max;
}

Interval FeasibleRegion::tmin(double u1_value) const {
  const double g = gamma(u1_value);
  const double T2 = schedule.T2;
  const double lo = std::max({g, T2 * (1.0 + coeffs.rho) - g * coeffs.eta, 0.0});
  const double hi = std::min(
      {g * coeffs.eta, T2 * (1.0 + coeffs.rho / coeffs.eta) - g, T2});
  return {lo, hi};
}

bool FeasibleRegion::empty() const { return u1.empty() || K < 2.0; }

FeasibleRegion feasible_region(const GaitSchedule& s, const WormModel& model) {
  const DerivedCoefficients& c = model.coeffs;
  FeasibleRegion r;
  r.schedule = s;
  r.friction = model.friction;
  r.coeffs = c;
  const double T = s.period;
  r.u1 = {c.beta * (0.5 * T - s.T1),
          c.beta * (T * (c.eta + c.rho) / (2.0 * (1.0 + c.rho)) - s.T1)};
  r.t1 = {kPhaseEps * T, phase_one_limit(T, c) - kPhaseEps * T};
  r.K = std::min(1.0 + c.eta, (c.eta - 1.0) * s.T3 / s.T1 - 1.0);
  return r;
}

InitialConditions select_initial_conditions(const FeasibleRegion& region,
                                            double u_ratio, double v_ratio) {
  if (!(u_ratio >= 0.0 && u_ratio <= 1.0 && v_ratio >= 0.0 && v_ratio <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "ratios must lie in [0, 1]");
  }
  if (region.empty()) {
    throw Error(ErrorCode::EmptyRegion, "feasible (u1, v1) region is empty");
  }
  InitialConditions ic;
  ic.u1 = region.u1.at(u_ratio);
  ic.v1 = region.v1(ic.u1).at(v_ratio);
  ic.gamma = region.gamma(ic.u1);
  ic.tmin = region.tmin(ic.u1);
  if (ic.tmin.empty()) {
    throw Error(ErrorCode::EmptyRegion, "Tmin window is empty");
  }
  return ic;
}

ConstantForceOrbit constant_force_orbit(double force, double v1, double d1,
                                        const WormModel& model) {
  const FrictionParams& p = model.friction;
  const DerivedCoefficients& c = model.coeffs;
  if (!(force > p.backward) || force > p.actuator_max) {
    throw Error(ErrorCode::InvalidArgument,
                "constant force must lie in (f_bw, f_u]");
  }
  if (!(c.beta > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "symmetric friction has no orbit");
  }
  struct Phases {
    double T1, T2, T3, residual;
  };
  // Every duration is affine in u1, and so is the v closure residual.
  auto phases = [&](double u1) {
    Phases ph{};
    ph.T1 = -(u1 + v1) / (force + p.backward);
    const double u2 = u1 + c.beta * ph.T1;
    const double v2 = v1 + (force + c.alpha) * ph.T1;
    ph.T2 = (u2 - v2) / (force + p.forward);
    ph.T3 = (p.forward * ph.T2 - c.beta * ph.T1) / c.beta;
    ph.residual = 2.0 * v1 + (force + c.alpha) * ph.T1 + force * ph.T2 +
                  (force - c.alpha) * ph.T3;
    return ph;
  };
  const double r0 = phases(0.0).residual;
  const double r1 = phases(1.0).residual;
  if (r1 == r0) {
    throw Error(ErrorCode::InfeasibleTargets, "orbit closure is degenerate");
  }
  const double u1 = -r0 / (r1 - r0);
  const Phases ph = phases(u1);
  if (!(ph.T1 > 0.0 && ph.T2 > 0.0 && ph.T3 > 0.0)) {
    throw Error(ErrorCode::InfeasibleTargets,
                "no constant-force orbit through v1 = " + std::to_string(v1));
  }
  ConstantForceOrbit orbit;
  orbit.force = force;
  orbit.schedule.period = 2.0 * (ph.T1 + ph.T2 + ph.T3);
  orbit.schedule.T1 = ph.T1;
  orbit.schedule.T2 = ph.T2;
  orbit.schedule.T3 = ph.T3;
  orbit.init = ConfigState{0.0, d1, v1, u1};
  return orbit;
}

}  // namespace wormgait
