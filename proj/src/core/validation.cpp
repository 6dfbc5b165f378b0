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

#include "wormgait/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wormgait/serialization.hpp"

namespace wormgait {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double config_error(const ConfigState& a, const ConfigState& b) {
  return std::max({std::abs(a.d - b.d), std::abs(a.v - b.v), std::abs(a.u - b.u)});
}

Residuals difference(const ConfigState& end, const ConfigState& start) {
  return Residuals{end.d - start.d, end.v - start.v, end.u - start.u};
}

std::string describe(double x) { return format_double(x); }

// Accumulates a maximum residual and the worst context.
struct Worst {
  double value = 0.0;
  std::string where;
  void add(double v, const std::string& tag) {
    if (!(v <= value)) {  // NaN counts as worst
      value = v;
      where = tag;
    }
  }
};

ValidationCheck make_check(std::string name, double residual, double tol,
                           std::string detail) {
  ValidationCheck c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tol;
  c.passed = residual <= tol;
  c.detail = std::move(detail);
  return c;
}

Trajectory simulate_design(const GaitDesign& g, const ForceProfile& profile,
                           const WormModel& model) {
  return simulate_period(g.schedule, profile, g.init, model);
}

struct RunCase {
  std::string tag;
  WormModel model;
  Trajectory traj;
  bool has_design = false;
  GaitDesign design;
  ProblemSetup setup;
  bool reachable_L = false;
  double V_closed = 0.0;
  bool has_alternative = false;
  Trajectory alternative;
};

}  // namespace

OracleComparison compare_with_oracle(const Trajectory& traj,
                                     const OracleOptions& options) {
  const double T = traj.t_end() - traj.t_begin();
  const WormState init = traj.world_state_at(traj.t_begin(), 0.0);
  const OracleTrajectory o = integrate_ode(traj.profile(), init, traj.t_begin(),
                                           T, traj.model().friction, options);
  OracleComparison out;
  for (const OracleNode& node : o.nodes) {
    const double t = std::min(node.t, traj.t_end());
    const ConfigState ref = to_config(traj.world_state_at(t, 0.0));
    out.max_state_error = std::max(out.max_state_error, config_error(to_config(node.state), ref));
  }
  std::vector<double> oracle_times;
  for (const OracleEvent& e : o.events) {
    if (e.t < traj.t_end()) oracle_times.push_back(e.t);
  }
  const std::vector<double> cf = traj.event_times();
  out.oracle_events = oracle_times.size();
  out.closed_form_events = cf.size();
  if (oracle_times.size() != cf.size()) {
    out.event_time_error = kInf;
  } else {
    for (std::size_t i = 0; i < cf.size(); ++i) {
      out.event_time_error = std::max(out.event_time_error, std::abs(oracle_times[i] - cf[i]));
    }
  }
  out.oracle_closure = difference(to_config(o.final_state()), to_config(o.nodes.front().state));
  out.min_interval_dissipation = kInf;
  for (double d : o.interval_dissipation) {
    out.min_interval_dissipation = std::min(out.min_interval_dissipation, d);
  }
  return out;
}

double oracle_self_convergence(const Trajectory& traj, const OracleOptions& options) {
  const double T = traj.t_end() - traj.t_begin();
  const WormState init = traj.world_state_at(traj.t_begin(), 0.0);
  OracleOptions fine = options;
  fine.step = 0.5 * options.step;
  const FrictionParams& p = traj.model().friction;
  const WormState a = integrate_ode(traj.profile(), init, traj.t_begin(), T, p, options).final_state();
  const WormState b = integrate_ode(traj.profile(), init, traj.t_begin(), T, p, fine).final_state();
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2),
                   std::abs(a.x1dot - b.x1dot), std::abs(a.x2dot - b.x2dot)});
}

WorkIdentity work_identity(const GaitDesign& design, const Trajectory& traj,
                           const WormModel& model) {
  WorkIdentity w;
  w.closed = {design.work.W1, design.work.W2, design.work.W3};
  const auto q = phase_work_quadrature(traj);
  for (std::size_t i = 0; i < 3; ++i) {
    w.quadrature[i] = q[i];
    const double scale = std::max(std::abs(w.closed[i]), std::abs(q[i]));
    const double err = scale > 0.0 ? std::abs(w.closed[i] - q[i]) / scale : 0.0;
    w.max_rel_error = std::max(w.max_rel_error, err);
  }
  w.W_unsubstituted = design.work.W_total;
  const double E = excursion(traj).E;
  w.W_substituted = substituted_total_work(design.work, E, design.h, design.J, model.coeffs);
  w.substitution_error = std::abs(w.W_substituted - w.W_unsubstituted) /
                         std::max(1.0, std::abs(w.W_unsubstituted));
  return w;
}

Dominance pontryagin_dominance(const GaitDesign& design, const FrictionParams& p,
                               std::size_t samples, std::uint64_t seed,
                               std::size_t slots) {
  Dominance d;
  d.J_bang = design.J;
  d.J_random_min = kInf;
  for (std::size_t k = 0; k < samples; ++k) {
    const ForceProfile G = random_admissible_profile(design.targets, design.schedule,
                                                     design.tmin, p, seed + k);
    const double J = phase_two_functional(CumulativeForce(CumulativePhase::G, G), design.tmin);
    d.J_random_min = std::min(d.J_random_min, J);
    if (J < d.J_bang - 1e-12) ++d.violations;
    ++d.random_count;
  }
  d.brute_slots = slots;
  d.J_brute = brute_force_optimal_G(design.targets, design.schedule, design.tmin, p, slots).J;
  d.band = design.schedule.T2 / static_cast<double>(slots) * (p.actuator_max - p.backward);

  std::vector<double> edges{0.0};
  for (double e : {design.bang.params.tau1, design.tmin + design.bang.params.tau2,
                   design.schedule.T2}) {
    if (e > edges.back()) edges.push_back(e);
  }
  d.J_aligned = brute_force_optimal_G(design.targets, design.schedule, design.tmin, p, edges).J;
  return d;
}

double printed_excursion_constant(const GaitSchedule& s, double u1, double v1,
                                  double tmin, const DerivedCoefficients& c) {
  const double f_bw = c.alpha + c.beta;
  const double offset2 = c.alpha * s.T1 + u1;
  const double offset3 = f_bw * s.T1 + c.beta * s.T2 + u1;
  return -v1 * s.T1 - 0.5 * c.alpha * s.T1 * s.T1 + offset2 * (2.0 * tmin - s.T2) +
         offset3 * s.T3 - 0.5 * c.alpha * s.T3 * s.T3;
}

OptimumAttribution optimum_attribution(const RunConfig& cfg) {
  OptimumAttribution a;
  ProblemSetup relaxed = cfg.setup();
  relaxed.enforce_excursion = false;
  const WormModel& model = relaxed.model;
  a.ref_T1r = cfg.T1r;
  a.ref_tminr = cfg.tminr;
  a.L = relaxed.L;

  const GaitDesign ref = design_gait_relative(relaxed, cfg.T1r, cfg.tminr);
  a.ref_P_u = ref.P_u;

  const SweepOptions opts{cfg.n1, cfg.n2, cfg.threads};
  const SweepResult sw = sweep(relaxed, opts);
  const CellResult& best = sw.best();
  a.argmin_T1r = best.T1r;
  a.argmin_tminr = best.tminr;
  a.argmin_P_u = best.P_u;
  a.refined_tminr = sw.refined.tminr;
  a.refined_P_u = sw.refined.P_u;
  a.interior_minimum = sw.interior_minimum();
  a.gap_T1r = std::abs(a.argmin_T1r - a.ref_T1r);
  a.gap_tminr = std::abs(a.argmin_tminr - a.ref_tminr);
  a.gap_exceeds = a.gap_T1r > 0.05 || a.gap_tminr > 0.05;

  const std::size_t j = sw.argmin % sw.n2;
  double lo = kInf;
  double hi = -kInf;
  for (std::size_t i = 0; i < sw.n1; ++i) {
    const CellResult& c = sw.at(i, j);
    if (!c.feasible()) continue;
    lo = std::min(lo, c.P_u);
    hi = std::max(hi, c.P_u);
  }
  a.ridge_spread = lo < kInf ? (hi - lo) / std::abs(lo) : kInf;

  const GaitSchedule printed =
      printed_phase_two_schedule(relaxed.period, ref.schedule.T1, model.coeffs);
  a.printed_T2 = printed.T2;
  a.corrected_T2 = ref.schedule.T2;
  a.printed_u_closure = u_closure_residual(printed, model.coeffs);
  a.corrected_u_closure = u_closure_residual(ref.schedule, model.coeffs);

  a.h_derived = ref.h;
  a.h_printed = printed_excursion_constant(ref.schedule, ref.ic.u1, ref.ic.v1,
                                           ref.tmin, model.coeffs);
  const Trajectory ref_traj = simulate_design(ref, ref.profile, model);
  const Excursion ref_ex = excursion(ref_traj);
  a.E_measured = ref_ex.E;
  a.E_with_derived_h = predicted_excursion(a.h_derived, ref.area_H, ref.area_I, ref.J);
  a.E_with_printed_h = predicted_excursion(a.h_printed, ref.area_H, ref.area_I, ref.J);
  a.t_min_at_ref_point = ref_ex.t_min;
  a.t_max_at_ref_point = ref_ex.t_max;
  const double base = 2.0 * (ref.h - ref.J);
  a.E_reachable = Interval{base + 2.0 * ref.hi.achievable.lo,
                           base + 2.0 * ref.hi.achievable.hi};

  ProblemSetup strict = relaxed;
  strict.enforce_excursion = true;
  try {
    a.strict_feasible_cells = sweep(strict, opts).feasible_count;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AllCellsInfeasible) throw;
    a.strict_feasible_cells = 0;
  }

  const GaitDesign opt = design_gait_relative(relaxed, best.T1r, best.tminr);
  const Excursion opt_ex = excursion(simulate_design(opt, opt.profile, model));
  a.t_min = opt_ex.t_min;
  a.t_max = opt_ex.t_max;

  std::ostringstream n;
  if (a.gap_exceeds) {
    n << "argmin (" << describe(a.argmin_T1r) << ", " << describe(a.argmin_tminr)
      << ") differs from the reference point by (" << describe(a.gap_T1r) << ", "
      << describe(a.gap_tminr) << "); P_u varies by " << describe(a.ridge_spread)
      << " (relative) along T1r at the argmin Tminr, so T1r is not identified and"
      << " grid ties resolve to the first row";
    a.notes.push_back(n.str());
    n.str("");
  }
  n << "phase-two duration as printed gives T2 = " << describe(a.printed_T2)
    << " with u-closure residual " << describe(a.printed_u_closure)
    << ", the corrected T2 = " << describe(a.corrected_T2) << " closes to "
    << describe(a.corrected_u_closure);
  a.notes.push_back(n.str());
  n.str("");
  n << "excursion constant: derived h = " << describe(a.h_derived)
    << " predicts E = " << describe(a.E_with_derived_h) << ", printed h = "
    << describe(a.h_printed) << " predicts E = " << describe(a.E_with_printed_h)
    << "; measured E = " << describe(a.E_measured);
  a.notes.push_back(n.str());
  n.str("");
  n << "reachable E at the reference point is [" << describe(a.E_reachable.lo) << ", "
    << describe(a.E_reachable.hi) << "] against L = " << describe(a.L) << "; "
    << a.strict_feasible_cells << " grid cells meet E = L exactly";
  a.notes.push_back(n.str());
  return a;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport run_validation(const RunConfig& cfg) {
  cfg.validate();
  const WormModel model = WormModel::make(cfg.friction());
  std::vector<RunCase> scenarios;

  // The configured point itself.
  GaitDesign config_design;
  bool config_has_design = false;
  {
    RunCase sc;
    sc.model = model;
    if (cfg.scenario == Scenario::ConstantForce) {
      sc.tag = "config:constant_force";
      const ConstantForceOrbit orbit = constant_force_orbit(cfg.force, cfg.v1, cfg.d1, model);
      sc.traj = simulate_period(orbit.schedule,
                                ForceProfile::constant(orbit.force, orbit.schedule.half_period()),
                                orbit.init, model);
      sc.V_closed = distance_and_velocity(orbit.schedule, orbit.init.u, model.coeffs).V;
    } else {
      sc.tag = "config:design";
      sc.setup = cfg.setup();
      sc.setup.enforce_excursion = false;
      sc.design = design_gait_relative(sc.setup, cfg.T1r, cfg.tminr);
      sc.has_design = true;
      sc.reachable_L = sc.design.excursion_met;
      sc.traj = simulate_design(sc.design, sc.design.profile, model);
      sc.V_closed = sc.design.dv.V;
      config_design = sc.design;
      config_has_design = true;
    }
    scenarios.push_back(std::move(sc));
  }

  // Seeded random draws, each also run with a non-constant admissible profile.
  const RandomKind kinds[] = {RandomKind::Affine, RandomKind::Sampled,
                              RandomKind::Harmonic, RandomKind::Constant};
  for (std::size_t k = 0; k < cfg.validation_draws; ++k) {
    const RandomDraw draw = random_feasible_draw(cfg.seed + k, true);
    RunCase sc;
    sc.tag = "draw:" + std::to_string(k);
    sc.model = draw.setup.model;
    sc.setup = draw.setup;
    sc.design = draw.design;
    sc.has_design = true;
    sc.reachable_L = true;
    sc.traj = simulate_design(draw.design, draw.design.profile, sc.model);
    sc.V_closed = draw.design.dv.V;
    Rng rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL + k));
    const ForceProfile alt = random_gait_profile(draw.design.targets, draw.design.schedule,
                                                 draw.design.tmin, sc.model.friction,
                                                 kinds[k % 4], rng);
    sc.alternative = simulate_design(draw.design, alt, sc.model);
    sc.has_alternative = true;
    scenarios.push_back(std::move(sc));
  }

  Worst closure, oracle_closure, state_err, event_err, convergence, dissipation;
  Worst velocity, velocity_profile, work_phase, work_subst, excursion_err, energy;
  for (const RunCase& sc : scenarios) {
    const double T = sc.traj.t_end() - sc.traj.t_begin();
    const OracleOptions oo = OracleOptions::for_period(T);
    std::vector<std::pair<std::string, const Trajectory*>> runs{{sc.tag, &sc.traj}};
    if (sc.has_alternative) runs.push_back({sc.tag + ":alt", &sc.alternative});
    for (const auto& [tag, traj] : runs) {
      closure.add(verify_periodicity(*traj).max_abs(), tag);
      const OracleComparison cmp = compare_with_oracle(*traj, oo);
      oracle_closure.add(cmp.oracle_closure.max_abs(), tag);
      state_err.add(cmp.max_state_error, tag);
      event_err.add(cmp.event_time_error, tag);
      dissipation.add(std::max(0.0, -cmp.min_interval_dissipation), tag);
      const double X = traj->com_displacement(traj->t_end());
      velocity.add(std::abs(X / T - sc.V_closed), tag);
      for (const EnergyBalance& e : energy_balance(*traj)) {
        energy.add(std::abs(e.residual) / (1.0 + std::abs(e.actuator_work)), tag);
      }
    }
    if (sc.has_alternative) {
      const double Xa = sc.alternative.com_displacement(sc.alternative.t_end());
      const double Xb = sc.traj.com_displacement(sc.traj.t_end());
      velocity_profile.add(std::abs(Xa - Xb) / T, sc.tag);
    }
    if (sc.has_design) {
      const WorkIdentity w = work_identity(sc.design, sc.traj, sc.model);
      work_phase.add(w.max_rel_error, sc.tag);
      work_subst.add(w.substitution_error, sc.tag);
      if (sc.reachable_L) {
        excursion_err.add(std::abs(excursion(sc.traj).E - sc.setup.L), sc.tag);
      }
    }
  }
  convergence.add(oracle_self_convergence(scenarios.front().traj,
                                          OracleOptions::for_period(scenarios.front().traj.t_end() -
                                                                    scenarios.front().traj.t_begin())),
                  scenarios.front().tag);

  ValidationReport report;
  auto at = [](const Worst& w) { return w.where.empty() ? std::string("all scenarios") : "worst at " + w.where; };
  const std::string count = std::to_string(scenarios.size()) + " scenarios, ";

  if (cfg.printed_phase_two) {
    // Rebuild every schedule with the phase-two duration as printed.
    Worst printed;
    for (const RunCase& sc : scenarios) {
      if (!sc.has_design) continue;
      const GaitSchedule& s = sc.design.schedule;
      const GaitSchedule p = printed_phase_two_schedule(s.period, s.T1, sc.model.coeffs);
      printed.add(std::abs(u_closure_residual(p, sc.model.coeffs)), sc.tag);
    }
    report.checks.push_back(make_check(
        "periodicity_closed_form", std::max(closure.value, printed.value), 1e-9,
        "phase-two duration as printed; u-closure residual " + describe(printed.value) + ", " + at(printed)));
  } else {
    report.checks.push_back(make_check("periodicity_closed_form", closure.value, 1e-9,
                                       count + at(closure)));
  }
  report.checks.push_back(make_check("periodicity_oracle", oracle_closure.value, 1e-6,
                                     count + at(oracle_closure)));
  report.checks.push_back(make_check("closed_form_vs_oracle", state_err.value, 1e-6,
                                     count + at(state_err)));
  report.checks.push_back(make_check("oracle_event_times", event_err.value, 1e-6,
                                     count + at(event_err)));
  report.checks.push_back(make_check("oracle_self_convergence", convergence.value, 1e-8,
                                     "step halved on " + convergence.where));
  report.checks.push_back(make_check("oracle_dissipation_nonnegative", dissipation.value, 1e-12,
                                     "most negative interval dissipation, " + at(dissipation)));
  report.checks.push_back(make_check("velocity_closed_form", velocity.value, 1e-9,
                                     count + at(velocity)));
  report.checks.push_back(make_check("velocity_profile_independence", velocity_profile.value, 1e-9,
                                     "design profile against a random admissible one, " + at(velocity_profile)));
  report.checks.push_back(make_check("work_per_phase", work_phase.value, 1e-8,
                                     "relative error of closed form against quadrature, " + at(work_phase)));
  report.checks.push_back(make_check("work_substitution", work_subst.value, 1e-10,
                                     "measured E in the substituted form, " + at(work_subst)));
  report.checks.push_back(make_check("excursion_constraint", excursion_err.value, 1e-8,
                                     "draws with reachable L, " + at(excursion_err)));
  report.checks.push_back(make_check("energy_balance", energy.value, 1e-9, count + at(energy)));

  // Phase-two optimality at the configured design (or the first draw).
  const GaitDesign& dom_design = config_has_design ? config_design : scenarios[1].design;
  const FrictionParams dom_p = config_has_design ? model.friction : scenarios[1].model.friction;
  const Dominance dom = pontryagin_dominance(dom_design, dom_p, 1000, cfg.seed, 12);
  {
    const double random_margin = std::max(0.0, dom.J_bang - dom.J_random_min);
    report.checks.push_back(make_check(
        "pontryagin_random", random_margin, 1e-12,
        std::to_string(dom.random_count) + " random profiles, J_bang " + describe(dom.J_bang) +
            ", best random J " + describe(dom.J_random_min)));
    const double brute_margin = std::max(0.0, dom.J_bang - dom.J_brute);
    report.checks.push_back(make_check(
        "pontryagin_brute_force", brute_margin, dom.band,
        std::to_string(dom.brute_slots) + " slots, best two-level J " + describe(dom.J_brute) +
            ", aligned grid J " + describe(dom.J_aligned)));
  }

  if (cfg.scenario == Scenario::Design) {
    report.has_attribution = true;
    report.attribution = optimum_attribution(cfg);
  }
  return report;
}

json to_json(const OracleComparison& c) {
  return {{"max_state_error", c.max_state_error},
          {"event_time_error", std::isfinite(c.event_time_error) ? json(c.event_time_error) : json(nullptr)},
          {"oracle_events", c.oracle_events},
          {"closed_form_events", c.closed_form_events},
          {"oracle_closure", {c.oracle_closure.d, c.oracle_closure.v, c.oracle_closure.u}},
          {"min_interval_dissipation", c.min_interval_dissipation}};
}

json to_json(const OptimumAttribution& a) {
  return {{"reference_point", {a.ref_T1r, a.ref_tminr}},
          {"reference_P_u", a.ref_P_u},
          {"argmin", {a.argmin_T1r, a.argmin_tminr}},
          {"argmin_P_u", a.argmin_P_u},
          {"refined_Tminr", a.refined_tminr},
          {"refined_P_u", a.refined_P_u},
          {"interior_minimum", a.interior_minimum},
          {"gap", {a.gap_T1r, a.gap_tminr}},
          {"gap_exceeds", a.gap_exceeds},
          {"ridge_spread", a.ridge_spread},
          {"T2_printed", a.printed_T2},
          {"T2_corrected", a.corrected_T2},
          {"u_closure_printed", a.printed_u_closure},
          {"u_closure_corrected", a.corrected_u_closure},
          {"h_derived", a.h_derived},
          {"h_printed", a.h_printed},
          {"E_measured", a.E_measured},
          {"E_with_derived_h", a.E_with_derived_h},
          {"E_with_printed_h", a.E_with_printed_h},
          {"E_reachable", {a.E_reachable.lo, a.E_reachable.hi}},
          {"L", a.L},
          {"strict_feasible_cells", a.strict_feasible_cells},
          {"t_min", a.t_min},
          {"t_max", a.t_max},
          {"t_min_at_reference", a.t_min_at_ref_point},
          {"t_max_at_reference", a.t_max_at_ref_point},
          {"t_min_expected", a.ref_t_min},
          {"t_max_expected", a.ref_t_max},
          {"notes", a.notes}};
}

json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const ValidationCheck& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed},
                      {"residual", std::isfinite(c.residual) ? json(c.residual) : json(nullptr)},
                      {"tolerance", c.tolerance}, {"detail", c.detail}});
  }
  json out = {{"passed", r.passed()}, {"checks", checks}};
  if (r.has_attribution) out["attribution"] = to_json(r.attribution);
  return out;
}

}  // namespace wormgait
