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

#include "wormgait/dynamics.hpp"

#include <cmath>
#include <string>

namespace wormgait {
namespace {

// Closed-form advance without argument checks.
ConfigState advance(const ModeRates& r, const ConfigState& s,
                    const ForceProfile& profile, double offset, double tau) {
  if (tau == 0.0) return s;
  const double impulse = profile.integral(offset, offset + tau);
  const double lag = profile.lag_integral(offset, offset + tau);
  ConfigState out;
  out.t = s.t + tau;
  out.v = s.v + r.force_coeff * impulse + r.v_offset * tau;
  out.u = s.u + r.u_rate * tau;
  out.d = s.d + 2.0 * (s.v * tau + r.force_coeff * lag +
                       0.5 * r.v_offset * tau * tau);
  return out;
}

// Velocity of one body in a mode, w = u +- v, written as
// w(tau) = w0 + k * int F + c * tau.
struct BodyRate {
  double k = 0.0;
  double c = 0.0;
};

BodyRate body_rate(const ModeRates& r, Body b) {
  if (b == Body::Head) return {r.force_coeff, r.v_offset + r.u_rate};
  return {-r.force_coeff, r.u_rate - r.v_offset};
}

double body_velocity(const ConfigState& s, Body b) {
  return b == Body::Head ? s.head_velocity() : s.tail_velocity();
}

// Smallest root in [0, len] of a*x^2 + b*x + c, or NaN.
double quadratic_root(double a, double b, double c, double len) {
  const double slack = 1e-12 * (1.0 + len);
  auto ok = [&](double x) { return std::isfinite(x) && x >= -slack && x <= len + slack; };
  if (std::abs(a) * len * len <= 1e-15 * (std::abs(b) * len + std::abs(c))) {
    if (b == 0.0) return std::nan("");
    const double x = -c / b;
    return ok(x) ? std::clamp(x, 0.0, len) : std::nan("");
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nan("");
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double best = std::nan("");
  for (double x : {q / a, q != 0.0 ? c / q : std::nan("")}) {
    if (ok(x) && (std::isnan(best) || x < best)) best = x;
  }
  return std::isnan(best) ? best : std::clamp(best, 0.0, len);
}

void require_gait_case(int case_id) {
  if (case_id < 1 || case_id > 6) {
    throw Error(ErrorCode::InvalidArgument,
                "case " + std::to_string(case_id) + " is not part of a gait");
  }
}

std::string describe(const ConfigState& s) {
  return "t = " + std::to_string(s.t) + ", (x1dot, x2dot) = (" +
         std::to_string(s.tail_velocity()) + ", " +
         std::to_string(s.head_velocity()) + ")";
}

}  // namespace

ConfigState propagate_mode(int case_id, const ConfigState& start,
                           const ForceProfile& profile, double offset,
                           double duration, const WormModel& model) {
  require_gait_case(case_id);
  if (!(duration >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "negative mode duration");
  }
  if (duration > 0.0 &&
      profile.min_value(offset, offset + duration) <
          model.friction.backward - 1e-12) {
    throw Error(ErrorCode::InvalidArgument,
                "force magnitude below f_bw inside the mode window");
  }
  return advance(mode_rates(case_id, model), start, profile, offset, duration);
}

EventHit find_event_time(int case_id, const ConfigState& start,
                         const ForceProfile& profile, double offset,
                         const WormModel& model, double horizon) {
  require_gait_case(case_id);
  const Mode mode = mode_for_case(case_id);
  const ModeRates rates = mode_rates(case_id, model);
  const double limit = std::min(offset + horizon, profile.duration());
  const double scale = 1.0 + std::abs(start.u) + std::abs(start.v);
  const double band = 1e-12 * scale;

  std::vector<double> cuts{offset};
  for (double x : profile.breakpoints()) {
    if (x > offset && x < limit) cuts.push_back(x);
  }
  cuts.push_back(limit);
  const bool affine = profile.piecewise_affine();

  EventHit best{std::numeric_limits<double>::infinity(), Body::Head};
  for (Body body : {Body::Tail, Body::Head}) {
    const double sigma = body == Body::Head ? mode.head_sign : mode.tail_sign;
    const BodyRate br = body_rate(rates, body);
    const double e0 = sigma * body_velocity(start, body);
    if (e0 < -1e-9 * scale) {
      throw Error(ErrorCode::EventBoundary,
                  "start state is outside case " + std::to_string(case_id) +
                      ": " + describe(start));
    }
    // e(x) = sigma * w at profile-local time x.
    auto e_at = [&](double x) {
      return e0 + sigma * (br.k * profile.integral(offset, x) +
                           br.c * (x - offset));
    };
    double left = e0;
    double impulse = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double x = cuts[i];
      const double y = cuts[i + 1];
      if (x - offset >= best.duration) break;
      const double piece = profile.integral(x, y);
      const double right =
          e0 + sigma * (br.k * (impulse + piece) + br.c * (y - offset));
      // A body parked at zero with zero acceleration (F = f_bw) hovers at
      // rounding level; only a drop below -band counts as leaving the mode.
      if (right < -band && left >= -band) {
        double root = std::nan("");
        const double len = y - x;
        if (affine && len > 0.0) {
          const double fa = profile.value(x);
          const double fb = 2.0 * piece / len - fa;  // left limit at y
          const double K = sigma * br.k;
          root = quadratic_root(0.5 * K * (fb - fa) / len,
                                K * fa + sigma * br.c, left, len);
        }
        if (std::isnan(root)) {
          double lo = x;
          double hi = y;
          for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (e_at(mid) > 0.0 ? lo : hi) = mid;
          }
          root = hi - x;
        }
        const double tau = x + root - offset;
        if (tau < best.duration) best = {tau, body};
        break;
      }
      left = right;
      impulse += piece;
    }
  }
  if (!std::isfinite(best.duration)) {
    throw Error(ErrorCode::HorizonExceeded,
                "no velocity zero in case " + std::to_string(case_id) +
                    " within the horizon");
  }
  return best;
}

Trajectory::Trajectory(WormModel model, ForceProfile profile,
                       std::vector<PhaseSegment> phases,
                       double schedule_mismatch)
    : model_(model),
      profile_(std::move(profile)),
      phases_(std::move(phases)),
      schedule_mismatch_(schedule_mismatch) {
  if (phases_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "trajectory without phases");
  }
}

std::size_t Trajectory::locate(double t) const {
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (t < phases_[i].t_end) return i;
  }
  return phases_.size() - 1;
}

ConfigState Trajectory::state_at(double t) const {
  const PhaseSegment& p = phases_[locate(t)];
  const double tau = std::clamp(t - p.t_begin, 0.0, p.t_end - p.t_begin);
  if (tau == p.t_end - p.t_begin) return p.end;
  ConfigState s = advance(mode_rates(p.case_id, model_), p.start, profile_,
                          p.offset, tau);
  s.t = t;
  return s;
}

double Trajectory::com_displacement(double t) const {
  const PhaseSegment& p = phases_[locate(t)];
  const double tau = std::clamp(t - p.t_begin, 0.0, p.t_end - p.t_begin);
  const double rate = mode_rates(p.case_id, model_).u_rate;
  return p.com_start + p.start.u * tau + 0.5 * rate * tau * tau;
}

WormState Trajectory::world_state_at(double t, double x1_anchor) const {
  const ConfigState c = state_at(t);
  // x1 = x1(0) + int (u - v) = x1(0) + X(t) - (d(t) - d(0)) / 2
  const double x1 = x1_anchor + com_displacement(t) - 0.5 * (c.d - first().d);
  return from_config(c, x1);
}

double Trajectory::force_at(double t) const {
  const PhaseSegment& p = phases_[locate(t)];
  const double local = std::clamp(p.offset + (t - p.t_begin), 0.0,
                                  profile_.duration());
  return p.force_sign * profile_.value(local);
}

int Trajectory::case_at(double t) const { return phases_[locate(t)].case_id; }

std::vector<double> Trajectory::event_times() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < phases_.size(); ++i) {
    if (phases_[i].force_sign == phases_[i + 1].force_sign) {
      out.push_back(phases_[i].t_end);
    }
  }
  return out;
}

std::vector<ConfigState> Trajectory::samples(std::size_t count) const {
  if (count == 0) count = 1;
  std::vector<ConfigState> out;
  out.reserve(count + 1);
  const double t0 = t_begin();
  const double span = t_end() - t0;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(state_at(t0 + span * static_cast<double>(k) /
                                     static_cast<double>(count)));
  }
  out.push_back(last());
  return out;
}

Trajectory simulate_period(const GaitSchedule& schedule,
                           const ForceProfile& profile, const ConfigState& init,
                           const WormModel& model,
                           const SimulateOptions& options) {
  const double T = schedule.period;
  const double half = schedule.half_period();
  if (!(T > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "period must be positive");
  }
  if (std::abs(profile.duration() - half) > 1e-9 * T) {
    throw Error(ErrorCode::InvalidArgument,
                "force profile must cover exactly half a period");
  }
  if (!(init.head_velocity() < 0.0 && init.tail_velocity() > 0.0)) {
    throw Error(ErrorCode::ModeSequence,
                "initial state is not in case 1: " + describe(init));
  }
  const auto planned = schedule.durations();
  const double tol = options.schedule_tol * T;
  std::vector<PhaseSegment> phases;
  double mismatch = 0.0;
  double com = 0.0;
  ConfigState state = init;
  state.t = schedule.start;
  Mode mode = mode_for_case(1);

  for (int h = 0; h < 2; ++h) {
    const double t_half = schedule.start + h * half;
    double offset = 0.0;
    if (h == 1) {
      mode = classify_mode(-1, mode.tail_sign, mode.head_sign);
    }
    for (int k = 0; k < 3; ++k) {
      const int expected = 3 * h + k + 1;
      if (mode.case_id != expected) {
        throw Error(ErrorCode::ModeSequence,
                    "entered case " + std::to_string(mode.case_id) +
                        " instead of case " + std::to_string(expected) +
                        " at " + describe(state));
      }
      double duration = half - offset;
      Mode next = mode;
      std::optional<EventHit> hit;
      try {
        hit = find_event_time(mode.case_id, state, profile, offset, model,
                              half - offset);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::HorizonExceeded) throw;
      }
      if (k < 2) {
        if (!hit) {
          throw Error(ErrorCode::ModeSequence,
                      "no velocity zero in case " +
                          std::to_string(mode.case_id) + " before the switch");
        }
        duration = hit->duration;
        next = hit->body == Body::Head
                   ? classify_mode(mode.force_sign, mode.tail_sign,
                                   -mode.head_sign)
                   : classify_mode(mode.force_sign, -mode.tail_sign,
                                   mode.head_sign);
      } else if (hit && hit->duration < duration - tol) {
        throw Error(ErrorCode::ModeSequence,
                    "unexpected velocity zero in case " +
                        std::to_string(mode.case_id) + " at t = " +
                        std::to_string(t_half + offset + hit->duration));
      }
      const ModeRates rates = mode_rates(mode.case_id, model);
      PhaseSegment seg;
      seg.case_id = mode.case_id;
      seg.force_sign = mode.force_sign;
      seg.offset = offset;
      seg.t_begin = t_half + offset;
      seg.start = state;
      seg.start.t = seg.t_begin;
      seg.com_start = com;
      seg.end = advance(rates, seg.start, profile, offset, duration);
      offset += duration;
      seg.t_end = k < 2 ? t_half + offset : t_half + half;
      seg.end.t = seg.t_end;
      if (!(seg.end.d > 0.0)) {
        throw Error(ErrorCode::ModeSequence,
                    "extension became non-positive at t = " +
                        std::to_string(seg.t_end));
      }
      com += seg.start.u * duration + 0.5 * rates.u_rate * duration * duration;
      mismatch = std::max(mismatch,
                          std::abs(duration - planned[static_cast<std::size_t>(3 * h + k)]));
      phases.push_back(seg);
      state = seg.end;
      mode = next;
    }
  }
  if (mismatch > tol) {
    throw Error(ErrorCode::ModeSequence,
                "event times disagree with the schedule by " +
                    std::to_string(mismatch));
  }
  Trajectory traj(model, profile, std::move(phases), mismatch);
  for (double t : velocity_zero_times(traj)) {
    if (!(traj.state_at(t).d > 0.0)) {
      throw Error(ErrorCode::ModeSequence,
                  "extension became non-positive at t = " + std::to_string(t));
    }
  }
  return traj;
}

double Residuals::max_abs() const {
  return std::max({std::abs(d), std::abs(v), std::abs(u)});
}

Residuals verify_periodicity(const Trajectory& traj) {
  const ConfigState& a = traj.first();
  const ConfigState& b = traj.last();
  return {b.d - a.d, b.v - a.v, b.u - a.u};
}

Residuals half_period_residuals(const Trajectory& traj) {
  const ConfigState& a = traj.first();
  for (const PhaseSegment& p : traj.phases()) {
    if (p.case_id == 4) return {0.0, p.start.v + a.v, p.start.u - a.u};
  }
  throw Error(ErrorCode::InvalidArgument, "trajectory has no second half");
}

std::vector<double> velocity_zero_times(const Trajectory& traj) {
  std::vector<double> out;
  for (const PhaseSegment& p : traj.phases()) {
    const double va = p.start.v;
    const double vb = p.end.v;
    if (vb == 0.0) {
      out.push_back(p.t_end);
      continue;
    }
    if (va == 0.0 || (va < 0.0) == (vb < 0.0)) continue;
    double lo = p.t_begin;
    double hi = p.t_end;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double vm = traj.state_at(mid).v;
      ((vm < 0.0) == (va < 0.0) ? lo : hi) = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

}  // namespace wormgait
