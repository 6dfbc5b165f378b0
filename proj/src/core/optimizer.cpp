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

#include "wormgait/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

namespace wormgait {
namespace {

// Slack used when the rhs sits on an achievable bound: it moves E by at
// most twice this amount.
constexpr double kRhsTol = 1e-11;

struct Quadratic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double x) const { return (a * x + b) * x + c; }
};

Quadratic fit3(double x0, double y0, double x1, double y1, double x2,
               double y2) {
  // Newton divided differences.
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double d012 = (d12 - d01) / (x2 - x0);
  Quadratic q;
  q.a = d012;
  q.b = d01 - d012 * (x0 + x1);
  q.c = y0 - x0 * (d01 - d012 * x1);
  return q;
}

// Real roots of q(x) = level inside [lo, hi].
std::vector<double> roots_in(const Quadratic& q, double level, double lo,
                             double hi) {
  std::vector<double> out;
  const double c = q.c - level;
  auto keep = [&](double x) {
    if (std::isfinite(x) && x >= lo && x <= hi) out.push_back(x);
  };
  const double scale = std::abs(q.b) + std::abs(q.a) * (std::abs(lo) + std::abs(hi));
  if (std::abs(q.a) * (hi - lo) <= 1e-14 * (scale + 1e-300)) {
    if (q.b != 0.0) keep(-c / q.b);
    return out;
  }
  const double disc = q.b * q.b - 4.0 * q.a * c;
  if (disc < 0.0) return out;
  const double r = -0.5 * (q.b + std::copysign(std::sqrt(disc), q.b));
  keep(r / q.a);
  if (r != 0.0) keep(c / r);
  return out;
}

int failure_class(const ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyRegion:
    case ErrorCode::InvalidArgument: return 0;
    case ErrorCode::InfeasibleTargets: return 1;
    case ErrorCode::InfeasibleExcursion: return 2;
    default: return -1;
  }
}

}  // namespace

BangBang bangbang_G(const GaitSchedule& s, double tmin,
                    const BoundaryTargets& targets, const WormModel& model) {
  const FrictionParams& p = model.friction;
  const double gap = p.actuator_max - p.backward;
  if (!(gap > 0.0)) {
    throw Error(ErrorCode::NoControlAuthority,
                "f_u = f_bw leaves no room for a bang-bang force");
  }
  const double g = targets.G_mid;
  BangBang out;
  double tau1 = (tmin * p.actuator_max - g) / gap;
  double tau2 =
      (tmin * p.backward - 2.0 * model.coeffs.alpha * s.T2 + g) / gap;
  const double tol = 1e-12 * (1.0 + s.T2);
  const double rest = s.T2 - tmin;
  if (tau1 < -tol || tau1 > tmin + tol || tau2 < -tol || tau2 > rest + tol) {
    throw Error(ErrorCode::InfeasibleTargets,
                "Tmin = " + std::to_string(tmin) +
                    " is outside the bang-bang existence window (tau1 = " +
                    std::to_string(tau1) + ", tau2 = " +
                    std::to_string(tau2) + ")");
  }
  tau1 = std::clamp(tau1, 0.0, tmin);
  tau2 = std::clamp(tau2, 0.0, rest);
  out.params = {tau1, tau2};
  out.profile = ForceProfile({Segment::constant(0.0, tau1, p.backward),
                              Segment::constant(tau1, tmin + tau2, p.actuator_max),
                              Segment::constant(tmin + tau2, s.T2, p.backward)});
  return out;
}

std::pair<SwitchingFunction, SwitchingFunction> costates(
    const BangBangParams& b, const GaitSchedule& s, double tmin) {
  return {SwitchingFunction{b.tau1, tmin},
          SwitchingFunction{b.tau2, s.T2 - tmin}};
}

double phase_one_from_ratio(const ProblemSetup& setup, double T1r) {
  return clamp_phase_one(
      setup.period, T1r * phase_one_limit(setup.period, setup.model.coeffs),
      setup.model.coeffs);
}

GaitDesign design_gait(const ProblemSetup& setup, double T1, double tmin) {
  const WormModel& model = setup.model;
  const DerivedCoefficients& c = model.coeffs;
  GaitDesign g;
  g.schedule = build_schedule(setup.period, T1, c, setup.start);
  const FeasibleRegion region = feasible_region(g.schedule, model);
  g.ic = select_initial_conditions(region, setup.u_ratio, setup.v_ratio);
  const double wtol = 1e-12 * setup.period;
  if (!g.ic.tmin.contains(tmin, wtol)) {
    throw Error(ErrorCode::EmptyRegion,
                "Tmin = " + std::to_string(tmin) + " outside its window [" +
                    std::to_string(g.ic.tmin.lo) + ", " +
                    std::to_string(g.ic.tmin.hi) + "]");
  }
  g.tmin = g.ic.tmin.clamp(tmin);
  const double u1 = g.ic.u1;
  const double v1 = g.ic.v1;
  g.targets = boundary_targets(g.schedule, u1, v1, model);
  check_phase_two_envelopes(g.targets, g.schedule, g.tmin, model.friction);
  g.bang = bangbang_G(g.schedule, g.tmin, g.targets, model);

  const CumulativeForce G(CumulativePhase::G, g.bang.profile);
  g.J = phase_two_functional(G, g.tmin);
  g.h = excursion_constant(g.schedule, u1, v1, g.tmin, c);
  g.rhs = 0.5 * setup.L - g.h + g.J;
  const Interval reach = achievable_rhs(g.targets, g.schedule, model.friction);
  const double slack = kRhsTol * (1.0 + std::abs(reach.lo) + std::abs(reach.hi));
  g.excursion_met = reach.contains(g.rhs, slack);
  const double target = setup.enforce_excursion ? g.rhs : reach.clamp(g.rhs);
  g.hi = synthesize_HI(g.targets, g.schedule, model.friction, target,
                       setup.representative, kRhsTol);
  g.hi.rhs = g.rhs;
  g.area_H = g.hi.phase1.area();
  g.area_I = g.hi.phase3.area();
  g.E_predicted = predicted_excursion(g.h, g.area_H, g.area_I, g.J);
  g.profile = g.hi.phase1.profile().append(g.bang.profile).append(
      g.hi.phase3.profile());
  g.init = ConfigState{setup.start, setup.d1, v1, u1};

  g.work = work_decomposition(g.targets, g.schedule, u1, v1, g.area_H,
                              g.area_I, c);
  g.W_substituted = substituted_total_work(g.work, setup.L, g.h, g.J, c);
  g.dv = distance_and_velocity(g.schedule, u1, c);
  g.P = g.W_substituted / setup.period;
  g.P_u = g.P / g.dv.X;
  g.P_u_realized = g.work.W_total / (setup.period * g.dv.X);
  return g;
}

GaitDesign design_gait_relative(const ProblemSetup& setup, double T1r,
                                double tminr) {
  const double T1 = phase_one_from_ratio(setup, T1r);
  const GaitSchedule s = build_schedule(setup.period, T1, setup.model.coeffs);
  const InitialConditions ic = select_initial_conditions(
      feasible_region(s, setup.model), setup.u_ratio, setup.v_ratio);
  return design_gait(setup, T1, ic.tmin.at(tminr));
}

const char* to_string(CellStatus s) noexcept {
  switch (s) {
    case CellStatus::Feasible: return "feasible";
    case CellStatus::RegionEmpty: return "region_empty";
    case CellStatus::TargetsInfeasible: return "targets_infeasible";
    case CellStatus::ExcursionUnreachable: return "excursion_unreachable";
  }
  return "unknown";
}

namespace {

void fill_cell(CellResult& cell, const GaitDesign& g) {
  cell.T1 = g.schedule.T1;
  cell.tmin = g.tmin;
  cell.u1 = g.ic.u1;
  cell.v1 = g.ic.v1;
  cell.P_u = g.P_u;
  cell.V = g.dv.V;
  cell.rhs = g.rhs;
  cell.achievable = g.hi.achievable;
  cell.E_predicted = g.E_predicted;
  cell.excursion_met = g.excursion_met;
}

}  // namespace

CellResult evaluate_cell(const ProblemSetup& setup, double T1r, double tminr) {
  CellResult cell;
  cell.T1r = T1r;
  cell.tminr = tminr;
  try {
    fill_cell(cell, design_gait_relative(setup, T1r, tminr));
    cell.status = CellStatus::Feasible;
  } catch (const Error& e) {
    switch (failure_class(e.code())) {
      case 0: cell.status = CellStatus::RegionEmpty; break;
      case 1: cell.status = CellStatus::TargetsInfeasible; break;
      case 2: {
        cell.status = CellStatus::ExcursionUnreachable;
        ProblemSetup relaxed = setup;
        relaxed.enforce_excursion = false;
        fill_cell(cell, design_gait_relative(relaxed, T1r, tminr));
        break;
      }
      default: throw;
    }
  }
  return cell;
}

TminOptimum optimize_tmin(const ProblemSetup& setup, double T1,
                          std::size_t scan_points) {
  const GaitSchedule s = build_schedule(setup.period, T1, setup.model.coeffs);
  const InitialConditions ic = select_initial_conditions(
      feasible_region(s, setup.model), setup.u_ratio, setup.v_ratio);
  ProblemSetup relaxed = setup;
  relaxed.enforce_excursion = false;

  TminOptimum out;
  out.T1 = T1;
  out.window = ic.tmin;
  const Interval& w = ic.tmin;

  struct Eval {
    double P_u = 0.0;
    double rhs = 0.0;
    Interval reach;
  };
  auto eval = [&](double x) {
    const GaitDesign g = design_gait(relaxed, T1, w.clamp(x));
    return Eval{g.P_u, g.rhs, g.hi.achievable};
  };
  auto feasible = [&](const Eval& e) {
    if (!setup.enforce_excursion) return true;
    const double slack =
        kRhsTol * (1.0 + std::abs(e.reach.lo) + std::abs(e.reach.hi));
    return e.reach.contains(e.rhs, slack);
  };

  std::vector<double> candidates{w.lo, w.hi};
  if (w.width() > 1e-12 * setup.period) {
    const double mid = w.at(0.5);
    const Eval e0 = eval(w.lo), e1 = eval(mid), e2 = eval(w.hi);
    const Quadratic P = fit3(w.lo, e0.P_u, mid, e1.P_u, w.hi, e2.P_u);
    const Quadratic R = fit3(w.lo, e0.rhs, mid, e1.rhs, w.hi, e2.rhs);
    out.a = P.a;
    out.b = P.b;
    out.c = P.c;
    if (P.a > 0.0) {
      const double x = -P.b / (2.0 * P.a);
      if (x > w.lo && x < w.hi) candidates.push_back(x);
    }
    if (setup.enforce_excursion) {
      for (double level : {e0.reach.lo, e0.reach.hi}) {
        for (double x : roots_in(R, level, w.lo, w.hi)) candidates.push_back(x);
      }
    }
  }

  bool found = false;
  for (double x : candidates) {
    const Eval e = eval(x);
    if (!feasible(e)) continue;
    if (!found || e.P_u < out.P_u || (e.P_u == out.P_u && x < out.tmin)) {
      out.tmin = x;
      out.P_u = e.P_u;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::InfeasibleExcursion,
                "no Tmin in the window meets the excursion target");
  }
  out.tminr = w.width() > 0.0 ? (out.tmin - w.lo) / w.width() : 0.0;

  out.scan_points = std::max<std::size_t>(scan_points, 2);
  bool scanned = false;
  for (std::size_t k = 0; k < out.scan_points; ++k) {
    const double x =
        w.at(static_cast<double>(k) / static_cast<double>(out.scan_points - 1));
    const Eval e = eval(x);
    if (!feasible(e)) continue;
    if (!scanned || e.P_u < out.scan_P_u) {
      out.scan_tmin = x;
      out.scan_P_u = e.P_u;
      scanned = true;
    }
  }
  return out;
}

bool SweepResult::interior_minimum() const {
  if (feasible_count == 0) return false;
  const double best_value = best().P_u;
  const double tie = 1e-12 * std::abs(best_value);
  // P_u can be flat along T1r, so the minimum may be a ridge touching the
  // border; any interior cell on it counts.
  for (std::size_t i = 1; i + 1 < n1; ++i) {
    for (std::size_t j = 1; j + 1 < n2; ++j) {
      const CellResult& c = at(i, j);
      if (c.feasible() && c.P_u <= best_value + tie) return true;
    }
  }
  return false;
}

SweepResult sweep(const ProblemSetup& setup, const SweepOptions& options) {
  if (options.n1 < 2 || options.n2 < 2) {
    throw Error(ErrorCode::InvalidArgument, "sweep grid needs n1, n2 >= 2");
  }
  SweepResult out;
  out.n1 = options.n1;
  out.n2 = options.n2;
  const std::size_t total = out.n1 * out.n2;
  out.cells.resize(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t k = next++; k < total; k = next++) {
      const double x =
          static_cast<double>(k / out.n2) / static_cast<double>(out.n1 - 1);
      const double y =
          static_cast<double>(k % out.n2) / static_cast<double>(out.n2 - 1);
      try {
        out.cells[k] = evaluate_cell(setup, x, y);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::max(1u, options.threads);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Grid-order merge keeps ties on the smallest (T1r, Tminr).
  bool found = false;
  for (std::size_t k = 0; k < total; ++k) {
    const CellResult& c = out.cells[k];
    if (!c.feasible()) continue;
    ++out.feasible_count;
    const double best = out.cells[out.argmin].P_u;
    if (!found || c.P_u < best - 1e-12 * std::abs(best)) {
      out.argmin = k;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::AllCellsInfeasible,
                "no feasible cell in the sweep grid");
  }
  const CellResult& best = out.best();
  out.refined_T1r = best.T1r;
  out.refined = optimize_tmin(setup, best.T1);
  for (int k = 0; k <= 4; ++k) {
    ProblemSetup probe = setup;
    probe.v_ratio = 0.25 * k;
    const CellResult c = evaluate_cell(probe, best.T1r, best.tminr);
    out.v_ratio_sensitivity.emplace_back(
        probe.v_ratio,
        c.status == CellStatus::RegionEmpty ||
                c.status == CellStatus::TargetsInfeasible
            ? std::nan("")
            : c.P_u);
  }
  return out;
}

double max_velocity_T1(double period, const DerivedCoefficients& c) {
  return clamp_phase_one(period, phase_one_limit(period, c), c);
}

}  // namespace wormgait
