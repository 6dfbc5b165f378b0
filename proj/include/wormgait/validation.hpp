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

#ifndef WORMGAIT_VALIDATION_HPP
#define WORMGAIT_VALIDATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "wormgait/config.hpp"
#include "wormgait/oracle.hpp"

namespace wormgait {

/// Closed-form trajectory against the independent integrator.
struct OracleComparison {
  double max_state_error = 0.0;  // max over steps of |d|, |v|, |u| error
  double event_time_error = 0.0; // inf when the event counts differ
  std::size_t oracle_events = 0;
  std::size_t closed_form_events = 0;
  Residuals oracle_closure;      // oracle end - start in (d, v, u)
  double min_interval_dissipation = 0.0;
};

OracleComparison compare_with_oracle(const Trajectory& traj,
                                     const OracleOptions& options);

/// Largest endpoint change in (x1, x2, x1dot, x2dot) when the step halves.
double oracle_self_convergence(const Trajectory& traj,
                               const OracleOptions& options);

struct WorkIdentity {
  std::array<double, 3> closed{};
  std::array<double, 3> quadrature{};
  double max_rel_error = 0.0;
  double W_unsubstituted = 0.0;
  double W_substituted = 0.0;  // with the measured E(T) in place of L
  double substitution_error = 0.0;
};

WorkIdentity work_identity(const GaitDesign& design, const Trajectory& traj,
                           const WormModel& model);

struct Dominance {
  double J_bang = 0.0;
  double J_random_min = 0.0;
  std::size_t random_count = 0;
  std::size_t violations = 0;  // samples with J < J_bang - 1e-12
  double J_brute = 0.0;
  std::size_t brute_slots = 0;
  double band = 0.0;           // T2 / slots * (f_u - f_bw)
  double J_aligned = 0.0;      // two-level search on the analytic switch grid
};

Dominance pontryagin_dominance(const GaitDesign& design, const FrictionParams& p,
                               std::size_t samples, std::uint64_t seed,
                               std::size_t slots);

/// h with the integrands exactly as typeset in the source derivation
/// (alpha*T1 + u1 offset in phase 2, f_bw*T1 + beta*T2 + u1 in phase 3).
double printed_excursion_constant(const GaitSchedule& s, double u1, double v1,
                                  double tmin, const DerivedCoefficients& c);

/// Evidence explaining why the worked-example optimum moves.
struct OptimumAttribution {
  double ref_T1r = 0.363635;
  double ref_tminr = 0.563214;
  double ref_P_u = 0.0;
  double argmin_T1r = 0.0;
  double argmin_tminr = 0.0;
  double argmin_P_u = 0.0;
  double refined_tminr = 0.0;
  double refined_P_u = 0.0;
  bool interior_minimum = false;
  double gap_T1r = 0.0;
  double gap_tminr = 0.0;
  bool gap_exceeds = false;  // either gap above 0.05
  double ridge_spread = 0.0; // relative P_u spread along T1r at argmin Tminr
  double printed_T2 = 0.0;
  double corrected_T2 = 0.0;
  double printed_u_closure = 0.0;
  double corrected_u_closure = 0.0;
  double h_derived = 0.0;
  double h_printed = 0.0;
  double E_measured = 0.0;
  double E_with_derived_h = 0.0;
  double E_with_printed_h = 0.0;
  Interval E_reachable;
  double L = 0.0;
  std::size_t strict_feasible_cells = 0;
  double ref_t_min = 2.24;
  double ref_t_max = 7.74;
  double t_min = 0.0;  // at the argmin design
  double t_max = 0.0;
  double t_min_at_ref_point = 0.0;
  double t_max_at_ref_point = 0.0;
  std::vector<std::string> notes;
};

OptimumAttribution optimum_attribution(const RunConfig& cfg);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool has_attribution = false;
  OptimumAttribution attribution;
  bool passed() const;
};

/// Runs the closed-form, oracle, periodicity, velocity, work, dominance,
/// excursion and energy suites. The config point is designed with the
/// excursion clamped to its reachable range; excursion equality is checked
/// on seeded draws whose L is reachable.
ValidationReport run_validation(const RunConfig& cfg);

nlohmann::json to_json(const OracleComparison& c);
nlohmann::json to_json(const OptimumAttribution& a);
nlohmann::json to_json(const ValidationReport& r);

}  // namespace wormgait

#endif  // WORMGAIT_VALIDATION_HPP
