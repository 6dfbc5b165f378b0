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

#include "wormgait/commands.hpp"

#include <filesystem>
#include <fstream>

#include "wormgait/serialization.hpp"
#include "wormgait/validation.hpp"

namespace wormgait {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string prepare_output(const RunConfig& cfg, const std::string& name) {
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + cfg.output_dir + ": " + ec.message());
  return (fs::path(cfg.output_dir) / name).string();
}

void write_file(const std::string& path, const std::string& content,
                CommandResult& result) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  result.files.push_back(path);
}

void write_json(const RunConfig& cfg, const std::string& name, const json& doc,
                CommandResult& result) {
  write_file(prepare_output(cfg, name), doc.dump(2) + "\n", result);
}

json config_json(const RunConfig& cfg) {
  json out = json::object();
  for (const std::string& key : config_keys()) out[key] = get_config_value(cfg, key);
  return out;
}

json residuals_json(const Residuals& r) { return {{"d", r.d}, {"v", r.v}, {"u", r.u}}; }

json performance_json(const PerformanceReport& p) {
  return {{"X", p.X}, {"V", p.V}, {"P", p.P}, {"P_u", p.P_u}, {"W1", p.W1},
          {"W2", p.W2}, {"W3", p.W3}, {"W_total", p.W_total}, {"E", p.E},
          {"t_min", p.t_min}, {"t_max", p.t_max}};
}

std::string trajectory_csv(const Trajectory& traj, std::size_t count) {
  std::string out = "t,x1,x2,d,v,u,F,mode\n";
  const double t0 = traj.t_begin();
  const double T = traj.t_end() - t0;
  for (std::size_t k = 0; k <= count; ++k) {
    const double t = k == count ? traj.t_end() : t0 + T * static_cast<double>(k) / count;
    const WormState w = traj.world_state_at(t, 0.0);
    const ConfigState c = traj.state_at(t);
    for (double x : {t, w.x1, w.x2, c.d, c.v, c.u, traj.force_at(t)}) {
      out += format_double(x);
      out += ',';
    }
    out += std::to_string(traj.case_at(t));
    out += '\n';
  }
  return out;
}

// Second-half rows reuse the first-half values negated, so antisymmetry
// holds exactly row by row.
std::string force_csv(const ForceProfile& half, double t1, std::size_t per_half) {
  const double H = half.duration();
  std::vector<double> times(per_half);
  std::vector<double> values(per_half);
  for (std::size_t k = 0; k < per_half; ++k) {
    times[k] = H * static_cast<double>(k) / per_half;
    values[k] = half.value(times[k]);
  }
  std::string out = "t,f\n";
  for (int sign : {1, -1}) {
    for (std::size_t k = 0; k < per_half; ++k) {
      const double t = t1 + times[k] + (sign > 0 ? 0.0 : H);
      out += format_double(t) + ',' + format_double(sign * values[k]) + '\n';
    }
  }
  return out;
}

std::string grid_csv(const SweepResult& sw) {
  std::string out =
      "T1r,Tminr,status,T1,tmin,u1,v1,P_u,V,rhs,rhs_lo,rhs_hi,E_predicted,excursion_met\n";
  for (const CellResult& c : sw.cells) {
    out += format_double(c.T1r) + ',' + format_double(c.tminr) + ',' + to_string(c.status);
    for (double x : {c.T1, c.tmin, c.u1, c.v1, c.P_u, c.V, c.rhs, c.achievable.lo,
                     c.achievable.hi, c.E_predicted}) {
      out += ',' + format_double(x);
    }
    out += c.excursion_met ? ",1\n" : ",0\n";
  }
  return out;
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Config:
    case ErrorCode::Io:
    case ErrorCode::InvalidArgument:
      return ExitCode::ConfigError;
    case ErrorCode::InfeasibleTargets:
    case ErrorCode::InfeasibleExcursion:
    case ErrorCode::EmptyRegion:
    case ErrorCode::NoControlAuthority:
    case ErrorCode::AllCellsInfeasible:
    case ErrorCode::ModeSequence:
    case ErrorCode::EventBoundary:
    case ErrorCode::HorizonExceeded:
      return ExitCode::Infeasible;
    case ErrorCode::Numerical:
      break;
  }
  return ExitCode::Internal;
}

CommandResult run_simulate(const RunConfig& cfg) {
  cfg.validate();
  CommandResult result;
  const WormModel model = WormModel::make(cfg.friction());
  json summary = {{"command", "simulate"}, {"scenario", to_string(cfg.scenario)}};
  Trajectory traj;
  if (cfg.scenario == Scenario::ConstantForce) {
    const ConstantForceOrbit orbit = constant_force_orbit(cfg.force, cfg.v1, cfg.d1, model);
    traj = simulate_period(orbit.schedule,
                           ForceProfile::constant(orbit.force, orbit.schedule.half_period()),
                           orbit.init, model);
    summary["schedule"] = to_json(orbit.schedule);
    summary["u1"] = orbit.init.u;
    summary["v1"] = orbit.init.v;
    summary["d1"] = orbit.init.d;
  } else {
    const GaitDesign g = design_gait_relative(cfg.setup(), cfg.T1r, cfg.tminr);
    traj = simulate_period(g.schedule, g.profile, g.init, model);
    summary["schedule"] = to_json(g.schedule);
    summary["design"] = to_json(g);
  }
  summary["closure_residuals"] = residuals_json(verify_periodicity(traj));
  summary["half_period_residuals"] = residuals_json(half_period_residuals(traj));
  summary["event_times"] = traj.event_times();
  summary["schedule_mismatch"] = traj.schedule_mismatch();
  summary["performance"] = performance_json(measure_performance(traj));
  summary["coefficients"] = to_json(model.coeffs);
  summary["config"] = config_json(cfg);

  write_file(prepare_output(cfg, "trajectory.csv"), trajectory_csv(traj, cfg.samples), result);
  write_json(cfg, "summary.json", summary, result);
  summary["status"] = "ok";
  result.report = std::move(summary);
  return result;
}

CommandResult run_optimize(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.scenario != Scenario::Design) {
    throw Error(ErrorCode::Config, "optimize needs scenario = design");
  }
  CommandResult result;
  const ProblemSetup setup = cfg.setup();
  const SweepResult sw = sweep(setup, SweepOptions{cfg.n1, cfg.n2, cfg.threads});
  const CellResult& best = sw.best();
  const GaitDesign g = design_gait(setup, sw.refined.T1, sw.refined.tmin);
  const Trajectory traj = simulate_period(g.schedule, g.profile, g.init, setup.model);
  const Excursion ex = excursion(traj);

  json argmin = {{"T1r", best.T1r},
                 {"Tminr", best.tminr},
                 {"P_u", best.P_u},
                 {"interior_minimum", sw.interior_minimum()},
                 {"feasible_cells", sw.feasible_count},
                 {"refined", {{"T1r", sw.refined_T1r},
                              {"Tminr", sw.refined.tminr},
                              {"T1", sw.refined.T1},
                              {"tmin", sw.refined.tmin},
                              {"P_u", sw.refined.P_u}}},
                 {"tau1", g.bang.params.tau1},
                 {"tau2", g.bang.params.tau2},
                 {"t_min", ex.t_min},
                 {"t_max", ex.t_max},
                 {"E_measured", ex.E},
                 {"L", setup.L}};
  json sens = json::array();
  for (const auto& [ratio, pu] : sw.v_ratio_sensitivity) sens.push_back({ratio, pu});
  argmin["v_ratio_sensitivity"] = sens;
  argmin["design"] = to_json(g);
  argmin["performance"] = performance_json(measure_performance(traj));
  argmin["config"] = config_json(cfg);

  write_file(prepare_output(cfg, "sweep_grid.csv"), grid_csv(sw), result);
  write_json(cfg, "argmin.json", argmin, result);
  write_file(prepare_output(cfg, "force.csv"), force_csv(g.profile, setup.start, cfg.samples),
             result);
  json profile = {{"t1", setup.start},
                  {"half_period", g.profile.duration()},
                  {"segments", profile_to_json(g.profile)}};
  write_json(cfg, "profile.json", profile, result);
  argmin["command"] = "optimize";
  argmin["status"] = "ok";
  result.report = std::move(argmin);
  return result;
}

CommandResult run_validate(const RunConfig& cfg) {
  CommandResult result;
  const ValidationReport report = run_validation(cfg);
  json doc = to_json(report);
  doc["config"] = config_json(cfg);
  write_json(cfg, "validation.json", doc, result);
  doc["command"] = "validate";
  doc["status"] = report.passed() ? "ok" : "validation_failed";
  result.exit = report.passed() ? ExitCode::Ok : ExitCode::ValidationFailed;
  result.report = std::move(doc);
  return result;
}

CommandResult run_guarded(CommandResult (*command)(const RunConfig&),
                          const RunConfig& cfg) {
  try {
    return command(cfg);
  } catch (const Error& e) {
    CommandResult r;
    r.exit = exit_code_for(e.code());
    r.report = {{"status", "error"}, {"code", to_string(e.code())}, {"message", e.what()}};
    return r;
  } catch (const std::exception& e) {
    CommandResult r;
    r.exit = ExitCode::Internal;
    r.report = {{"status", "error"}, {"code", "internal"}, {"message", e.what()}};
    return r;
  }
}

}  // namespace wormgait
