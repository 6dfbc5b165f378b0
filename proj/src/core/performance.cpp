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

#include "wormgait/performance.hpp"

#include <cmath>

#include "wormgait/quadrature.hpp"

namespace wormgait {

DistanceVelocity distance_and_velocity(const GaitSchedule& s, double u1,
                                       const DerivedCoefficients& c) {
  const double f_fw = c.alpha - c.beta;
  const double T = s.period;
  DistanceVelocity out;
  out.V = u1 + c.beta * s.T1 - T * f_fw * c.beta / (4.0 * c.alpha);
  out.X = T * out.V;
  return out;
}

WorkTerms work_decomposition(const BoundaryTargets& t, const GaitSchedule& s,
                             double u1, double v1, double area_H,
                             double area_I, const DerivedCoefficients& c) {
  WorkTerms w;
  const double g = c.beta * s.T1 + u1;
  w.W1_const = 0.5 * t.H_end * t.H_end + t.H_end * (c.alpha * s.T1 + v1);
  w.W2_const = 0.5 * t.G_end * t.G_end - g * t.G_end;
  w.W3_const = 0.5 * t.I_end * t.I_end - (t.I_end + v1) * t.I_end;
  w.W1 = w.W1_const - c.alpha * area_H;
  w.W2 = w.W2_const;
  w.W3 = w.W3_const + c.alpha * area_I;
  w.W_const = w.W1_const + w.W2_const + w.W3_const;
  w.W_total = 2.0 * (w.W1 + w.W2 + w.W3);
  return w;
}

double substituted_total_work(const WorkTerms& w, double L, double h, double J,
                              const DerivedCoefficients& c) {
  return 2.0 * w.W_const + c.alpha * L - 2.0 * c.alpha * h + 2.0 * c.alpha * J;
}

std::array<double, 6> phase_work_quadrature(const Trajectory& traj,
                                            double abs_tol) {
  std::array<double, 6> out{};
  const auto& phases = traj.phases();
  const std::vector<double> cuts = traj.profile().breakpoints();
  for (std::size_t i = 0; i < phases.size() && i < out.size(); ++i) {
    const PhaseSegment& p = phases[i];
    std::vector<double> local;
    for (double x : cuts) local.push_back(p.t_begin + (x - p.offset));
    // Evaluate inside the segment only so boundary jumps are not sampled.
    const ModeRates rates = mode_rates(p.case_id, traj.model());
    auto integrand = [&](double t) {
      const double tau = t - p.t_begin;
      const double F = traj.profile().value(p.offset + tau);
      const double v = p.start.v +
                       rates.force_coeff *
                           traj.profile().integral(p.offset, p.offset + tau) +
                       rates.v_offset * tau;
      return p.force_sign * F * v;
    };
    out[i] = quad::integrate_split(integrand, p.t_begin, p.t_end, local,
                                   abs_tol / 6.0, 1e-14)
                 .value;
  }
  return out;
}

PowerResult power_direct(const Trajectory& traj, double abs_tol) {
  PowerResult r;
  for (double w : phase_work_quadrature(traj, abs_tol)) r.W += w;
  r.X = traj.com_displacement(traj.t_end());
  if (!(r.X > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "distance per period is not positive");
  }
  const double T = traj.t_end() - traj.t_begin();
  r.P = r.W / T;
  r.P_u = r.P / r.X;
  return r;
}

std::array<EnergyBalance, 6> energy_balance(const Trajectory& traj) {
  std::array<EnergyBalance, 6> out{};
  const auto work = phase_work_quadrature(traj, 1e-12);
  const FrictionParams& fp = traj.model().friction;
  for (std::size_t i = 0; i < traj.phases().size() && i < out.size(); ++i) {
    const PhaseSegment& p = traj.phases()[i];
    const Mode mode = mode_for_case(p.case_id);
    auto ke = [](const ConfigState& s) { return s.u * s.u + s.v * s.v; };
    const double com = traj.com_displacement(p.t_end) - p.com_start;
    const double dd = p.end.d - p.start.d;
    const double dx1 = com - 0.5 * dd;
    const double dx2 = com + 0.5 * dd;
    // Kinetic friction does work -|f_i| |dx_i| while the sign is fixed.
    const double f1 = std::abs(kinetic_friction(mode.tail_sign, fp));
    const double f2 = std::abs(kinetic_friction(mode.head_sign, fp));
    EnergyBalance& e = out[i];
    e.delta_ke = ke(p.end) - ke(p.start);
    e.actuator_work = 2.0 * work[i];
    e.dissipation = f1 * std::abs(dx1) + f2 * std::abs(dx2);
    e.residual = e.delta_ke - e.actuator_work + e.dissipation;
  }
  return out;
}

PerformanceReport measure_performance(const Trajectory& traj) {
  PerformanceReport r;
  const auto work = phase_work_quadrature(traj);
  const PowerResult pw = power_direct(traj);
  const Excursion ex = excursion(traj);
  const double T = traj.t_end() - traj.t_begin();
  r.X = pw.X;
  r.V = pw.X / T;
  r.P = pw.P;
  r.P_u = pw.P_u;
  r.W1 = work[0];
  r.W2 = work[1];
  r.W3 = work[2];
  r.W_total = pw.W;
  r.E = ex.E;
  r.t_min = ex.t_min;
  r.t_max = ex.t_max;
  return r;
}

}  // namespace wormgait
