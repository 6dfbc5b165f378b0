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

#ifndef WORMGAIT_DYNAMICS_HPP
#define WORMGAIT_DYNAMICS_HPP

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "wormgait/force_profile.hpp"
#include "wormgait/schedule.hpp"

namespace wormgait {

/// Closed-form state after `duration` in one mode. The force magnitude is
/// read from `profile` on [offset, offset + duration]:
///   v = v0 + s * int F + v_offset * tau
///   u = u0 + u_rate * tau
///   d = d0 + 2 * int v
/// Throws Error(InvalidArgument) for cases outside 1..6, negative duration
/// or F < f_bw on the window.
ConfigState propagate_mode(int case_id, const ConfigState& start,
                           const ForceProfile& profile, double offset,
                           double duration, const WormModel& model);

enum class Body { Tail = 1, Head = 2 };

struct EventHit {
  double duration = 0.0;
  Body body = Body::Head;
};

/// Time until the first body velocity leaves the sign required by the mode.
/// The search covers [offset, min(offset + horizon, profile end)]. Roots are
/// analytic on affine pieces and bisected on harmonic ones. A body sitting
/// exactly at zero counts as inside the mode. Throws Error(HorizonExceeded)
/// when nothing crosses and Error(EventBoundary) when the start state is
/// already outside the mode.
EventHit find_event_time(int case_id, const ConfigState& start,
                         const ForceProfile& profile, double offset,
                         const WormModel& model,
                         double horizon = std::numeric_limits<double>::infinity());

/// One mode interval of a simulated period.
struct PhaseSegment {
  int case_id = 0;
  int force_sign = 0;
  double t_begin = 0.0;  // absolute time
  double t_end = 0.0;
  double offset = 0.0;  // profile-local time at t_begin
  ConfigState start;
  ConfigState end;
  double com_start = 0.0;  // centre of mass displacement at t_begin
};

/// Closed-form trajectory over one period; every query is exact up to the
/// force-profile integrals.
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(WormModel model, ForceProfile profile,
             std::vector<PhaseSegment> phases, double schedule_mismatch);

  const std::vector<PhaseSegment>& phases() const { return phases_; }
  const ForceProfile& profile() const { return profile_; }
  const WormModel& model() const { return model_; }

  double t_begin() const { return phases_.front().t_begin; }
  double t_end() const { return phases_.back().t_end; }
  const ConfigState& first() const { return phases_.front().start; }
  const ConfigState& last() const { return phases_.back().end; }

  ConfigState state_at(double t) const;

  /// Physical positions with x1(t_begin) = x1_anchor.
  WormState world_state_at(double t, double x1_anchor) const;

  /// Integral of u from t_begin to t.
  double com_displacement(double t) const;

  /// Signed actuator force f(t).
  double force_at(double t) const;
  int case_at(double t) const;

  /// Zero-crossing times of the body velocities (interior mode boundaries
  /// other than the force switch).
  std::vector<double> event_times() const;

  /// Largest |realized - scheduled| phase duration.
  double schedule_mismatch() const { return schedule_mismatch_; }

  /// Uniform samples; `count` intervals give count + 1 states including both
  /// ends.
  std::vector<ConfigState> samples(std::size_t count = 1000) const;

 private:
  std::size_t locate(double t) const;

  WormModel model_;
  ForceProfile profile_;
  std::vector<PhaseSegment> phases_;
  double schedule_mismatch_ = 0.0;
};

struct SimulateOptions {
  /// Allowed |realized - scheduled| phase duration, relative to T.
  double schedule_tol = 1e-7;
};

/// Chains cases 1..6 with the force switch at t1 + T/2 and the extension
/// f(t) = -F(t - T/2). Throws Error(ModeSequence) when the observed case
/// order deviates, event times disagree with the schedule, or d <= 0.
Trajectory simulate_period(const GaitSchedule& schedule,
                           const ForceProfile& profile, const ConfigState& init,
                           const WormModel& model,
                           const SimulateOptions& options = {});

struct Residuals {
  double d = 0.0;
  double v = 0.0;
  double u = 0.0;

  double max_abs() const;
};

/// State change over the whole trajectory (end - start).
Residuals verify_periodicity(const Trajectory& traj);

/// Mirror-symmetry residual at the force switch: (0, v(t4) + v(t1),
/// u(t4) - u(t1)). The extension is not constrained at t4.
Residuals half_period_residuals(const Trajectory& traj);

/// Times where v crosses zero, found by bisection on the closed form.
std::vector<double> velocity_zero_times(const Trajectory& traj);

}  // namespace wormgait

#endif  // WORMGAIT_DYNAMICS_HPP
