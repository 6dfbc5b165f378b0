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

#ifndef WORMGAIT_OPTIMIZER_HPP
#define WORMGAIT_OPTIMIZER_HPP

#include <vector>

#include "wormgait/constraints.hpp"
#include "wormgait/performance.hpp"
#include "wormgait/schedule.hpp"

namespace wormgait {

/// Fixed inputs of the minimum-power problem.
struct ProblemSetup {
  WormModel model = WormModel::make(FrictionParams{});
  double period = 10.0;
  double start = 0.0;  // t1
  double d1 = 40.0;
  double L = 32.261;
  double u_ratio = 0.2;
  double v_ratio = 0.5;
  Representative representative = Representative::Balanced;
  /// When false, cells whose excursion target is out of reach are still
  /// evaluated: the H/I pieces take the closest achievable value and the
  /// objective keeps the nominal L.
  bool enforce_excursion = true;
};

struct BangBangParams {
  double tau1 = 0.0;  // offset of the first switch within [0, Tmin]
  double tau2 = 0.0;  // offset of the second switch within [0, T2 - Tmin]
};

struct BangBang {
  BangBangParams params;
  ForceProfile profile;  // on [0, T2]: f_bw, f_u, f_bw
};

/// tau1 = (Tmin f_u - g)/(f_u - f_bw), tau2 = (Tmin f_bw - 2 alpha T2 + g)/
/// (f_u - f_bw) with g = beta T1 + u1 = G_mid. Throws
/// Error(NoControlAuthority) for f_u = f_bw and Error(InfeasibleTargets)
/// when Tmin leaves either existence window.
BangBang bangbang_G(const GaitSchedule& s, double tmin,
                    const BoundaryTargets& targets, const WormModel& model);

/// Switching function lambda(s) = -s + tau of one phase-two sub-problem.
struct SwitchingFunction {
  double tau = 0.0;
  double length = 0.0;

  double value(double s) const { return -s + tau; }
  /// Number of sign changes on (0, length) (zero or one; never an arc).
  int zero_count() const { return tau > 0.0 && tau < length ? 1 : 0; }
};

/// (lambda1 on [0, Tmin], lambda2 on [0, T2 - Tmin]).
std::pair<SwitchingFunction, SwitchingFunction> costates(
    const BangBangParams& b, const GaitSchedule& s, double tmin);

/// Complete gait for one (T1, Tmin): schedule, start point, force profile
/// and closed-form performance.
struct GaitDesign {
  GaitSchedule schedule;
  InitialConditions ic;
  double tmin = 0.0;
  BoundaryTargets targets;
  BangBang bang;
  HISynthesis hi;
  ForceProfile profile;  // half period, relative to t1
  ConfigState init;
  double h = 0.0;
  double J = 0.0;
  double rhs = 0.0;  // required int I - int H for E = L
  double area_H = 0.0;
  double area_I = 0.0;
  double E_predicted = 0.0;
  bool excursion_met = false;
  WorkTerms work;
  double W_substituted = 0.0;
  DistanceVelocity dv;
  double P = 0.0;    // objective with the nominal L
  double P_u = 0.0;  // P / X
  double P_u_realized = 0.0;  // from the realized H/I pieces
};

/// Throws Error(EmptyRegion), Error(InfeasibleTargets) or
/// Error(InfeasibleExcursion) (the last only with enforce_excursion).
GaitDesign design_gait(const ProblemSetup& setup, double T1, double tmin);

/// T1 = T1r * T rho/(1 + rho) (clamped inside the open interval) and
/// Tmin = lerp(Tmin window, Tminr).
GaitDesign design_gait_relative(const ProblemSetup& setup, double T1r,
                                double tminr);

/// Absolute T1 for a relative coordinate.
double phase_one_from_ratio(const ProblemSetup& setup, double T1r);

enum class CellStatus { Feasible, RegionEmpty, TargetsInfeasible, ExcursionUnreachable };

const char* to_string(CellStatus s) noexcept;

struct CellResult {
  double T1r = 0.0;
  double tminr = 0.0;
  CellStatus status = CellStatus::RegionEmpty;
  double T1 = 0.0;
  double tmin = 0.0;
  double u1 = 0.0;
  double v1 = 0.0;
  double P_u = 0.0;
  double V = 0.0;
  double rhs = 0.0;
  Interval achievable;
  double E_predicted = 0.0;
  bool excursion_met = false;

  bool feasible() const { return status == CellStatus::Feasible; }
};

/// Never throws for infeasible points; reports the reason in `status`.
CellResult evaluate_cell(const ProblemSetup& setup, double T1r, double tminr);

struct TminOptimum {
  double T1 = 0.0;
  Interval window;
  double tmin = 0.0;
  double tminr = 0.0;
  double P_u = 0.0;
  /// Quadratic coefficients of P_u(Tmin) = a Tmin^2 + b Tmin + c.
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double scan_tmin = 0.0;
  double scan_P_u = 0.0;
  std::size_t scan_points = 0;
};

/// Minimises P_u over the Tmin window (and over the excursion-feasible part
/// of it when enforced). Uses the exact quadratic shape: three evaluations
/// fix it, candidates are the window ends, the stationary point and the
/// roots of the excursion bounds. A dense scan is kept for cross-checking.
/// Throws Error(EmptyRegion) for an empty window and
/// Error(InfeasibleExcursion) when no Tmin meets the excursion target.
TminOptimum optimize_tmin(const ProblemSetup& setup, double T1,
                          std::size_t scan_points = 1000);

struct SweepOptions {
  std::size_t n1 = 101;
  std::size_t n2 = 101;
  unsigned threads = 1;
};

struct SweepResult {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<CellResult> cells;  // row-major: index = i * n2 + j
  std::size_t argmin = 0;
  std::size_t feasible_count = 0;
  /// Continuous refinement of the argmin row via optimize_tmin.
  TminOptimum refined;
  double refined_T1r = 0.0;
  /// P_u at the argmin (T1r, Tminr) for v_ratio 0, 0.25, ..., 1.
  std::vector<std::pair<double, double>> v_ratio_sensitivity;

  const CellResult& best() const { return cells[argmin]; }
  const CellResult& at(std::size_t i, std::size_t j) const {
    return cells[i * n2 + j];
  }
  /// Some cell off the grid border attains the minimum (1e-12 relative).
  bool interior_minimum() const;
};

/// Grid T1r_i = i/(n1-1), Tminr_j = j/(n2-1). Ties within 1e-12 relative go
/// to the smallest T1r, then the smallest Tminr. Cells are evaluated in
/// parallel and merged in grid order. Throws Error(AllCellsInfeasible).
SweepResult sweep(const ProblemSetup& setup, const SweepOptions& options = {});

/// Problem 1 (maximum average velocity): the supremum T rho/(1+rho), moved
/// inside the open interval by 1e-9 T.
double max_velocity_T1(double period, const DerivedCoefficients& c);

}  // namespace wormgait

#endif  // WORMGAIT_OPTIMIZER_HPP
