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

#include "wormgait/force_profile.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wormgait/quadrature.hpp"

namespace wormgait {
namespace {

double time_tol(double duration) { return 1e-12 * (1.0 + std::abs(duration)); }

void require_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + ": non-finite parameter");
    }
  }
}

void check_segment(const Segment& s) {
  if (!std::isfinite(s.t_begin) || !std::isfinite(s.t_end) ||
      s.t_end < s.t_begin) {
    throw Error(ErrorCode::InvalidArgument, "segment: bad time window");
  }
  require_finite(s.params, "segment");
  std::size_t need = 0;
  switch (s.kind) {
    case SegmentKind::Constant: need = 1; break;
    case SegmentKind::Affine: need = 2; break;
    case SegmentKind::Harmonic: need = 4; break;
    case SegmentKind::Sampled:
      if (s.params.size() < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "sampled segment needs at least two nodes");
      }
      return;
  }
  if (s.params.size() != need) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("segment of kind ") + to_string(s.kind) +
                    " expects " + std::to_string(need) + " parameters");
  }
}

// Range of sin over [th0, th1].
std::pair<double, double> sin_range(double th0, double th1) {
  if (th1 < th0) std::swap(th0, th1);
  double lo = std::min(std::sin(th0), std::sin(th1));
  double hi = std::max(std::sin(th0), std::sin(th1));
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double peak = std::numbers::pi / 2.0;
  if (std::ceil((th0 - peak) / two_pi) <= std::floor((th1 - peak) / two_pi)) {
    hi = 1.0;
  }
  if (std::ceil((th0 + peak) / two_pi) <= std::floor((th1 + peak) / two_pi)) {
    lo = -1.0;
  }
  return {lo, hi};
}

}  // namespace

const char* to_string(SegmentKind kind) noexcept {
  switch (kind) {
    case SegmentKind::Constant: return "constant";
    case SegmentKind::Affine: return "affine";
    case SegmentKind::Sampled: return "sampled";
    case SegmentKind::Harmonic: return "harmonic";
  }
  return "unknown";
}

SegmentKind segment_kind_from_string(std::string_view name) {
  if (name == "constant") return SegmentKind::Constant;
  if (name == "affine") return SegmentKind::Affine;
  if (name == "sampled") return SegmentKind::Sampled;
  if (name == "harmonic") return SegmentKind::Harmonic;
  throw Error(ErrorCode::InvalidArgument,
              "unknown segment kind '" + std::string(name) + "'");
}

Segment Segment::constant(double t0, double t1, double level) {
  return Segment{t0, t1, SegmentKind::Constant, {level}};
}

Segment Segment::affine(double t0, double t1, double f0, double f1) {
  return Segment{t0, t1, SegmentKind::Affine, {f0, f1}};
}

Segment Segment::sampled(double t0, double t1, std::vector<double> nodes) {
  return Segment{t0, t1, SegmentKind::Sampled, std::move(nodes)};
}

Segment Segment::harmonic(double t0, double t1, double mean, double amplitude,
                          double omega, double phase) {
  return Segment{t0, t1, SegmentKind::Harmonic, {mean, amplitude, omega, phase}};
}

double ForceProfile::Piece::value(double t) const {
  if (harmonic) return f0 + f1 * std::sin(omega * (t - a) + phase);
  if (b <= a) return f0;
  return f0 + (f1 - f0) * ((t - a) / (b - a));
}

ForceProfile::ForceProfile(std::vector<Segment> segments) {
  double cursor = 0.0;
  for (Segment& s : segments) {
    check_segment(s);
    if (std::abs(s.t_begin - cursor) > time_tol(cursor)) {
      throw Error(ErrorCode::InvalidArgument,
                  "force profile segments must be contiguous from t = 0");
    }
    s.t_begin = cursor;
    cursor = s.t_end;
    if (s.length() > 0.0) segments_.push_back(std::move(s));
  }
  build_pieces();
}

ForceProfile ForceProfile::constant(double level, double duration) {
  return ForceProfile({Segment::constant(0.0, duration, level)});
}

double ForceProfile::duration() const {
  return segments_.empty() ? 0.0 : segments_.back().t_end;
}

void ForceProfile::build_pieces() {
  pieces_.clear();
  for (const Segment& s : segments_) {
    switch (s.kind) {
      case SegmentKind::Constant:
        pieces_.push_back({s.t_begin, s.t_end, false, s.params[0], s.params[0]});
        break;
      case SegmentKind::Affine:
        pieces_.push_back({s.t_begin, s.t_end, false, s.params[0], s.params[1]});
        break;
      case SegmentKind::Sampled: {
        const std::size_t n = s.params.size() - 1;
        const double h = s.length() / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
          const double a = s.t_begin + h * static_cast<double>(i);
          const double b = i + 1 == n ? s.t_end : a + h;
          pieces_.push_back({a, b, false, s.params[i], s.params[i + 1]});
        }
        break;
      }
      case SegmentKind::Harmonic:
        pieces_.push_back({s.t_begin, s.t_end, true, s.params[0], s.params[1],
                           s.params[2], s.params[3]});
        break;
    }
  }
}

double ForceProfile::clamp_time(double t) const {
  const double dur = duration();
  if (empty() || t < -time_tol(dur) || t > dur + time_tol(dur) ||
      !std::isfinite(t)) {
    throw Error(ErrorCode::InvalidArgument,
                "time " + std::to_string(t) + " outside the force profile");
  }
  return std::clamp(t, 0.0, dur);
}

std::size_t ForceProfile::locate(double t) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double x, const Piece& p) { return x < p.a; });
  if (it == pieces_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(pieces_.begin(), it)) - 1;
}

double ForceProfile::value(double t) const {
  t = clamp_time(t);
  return pieces_[locate(t)].value(t);
}

double ForceProfile::left_value(double t) const {
  t = clamp_time(t);
  std::size_t i = locate(t);
  while (i > 0 && pieces_[i].a >= t) --i;
  return pieces_[i].value(t);
}

double ForceProfile::signed_value(double t) const {
  const double half = duration();
  if (empty() || half <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "empty force profile");
  }
  double tau = std::fmod(t, 2.0 * half);
  if (tau < 0.0) tau += 2.0 * half;
  return tau < half ? value(tau) : -value(tau - half);
}

double ForceProfile::integral(double a, double b) const {
  if (b < a) return -integral(b, a);
  a = clamp_time(a);
  b = clamp_time(b);
  double total = 0.0;
  for (std::size_t i = locate(a); i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.a >= b) break;
    const double x = std::max(a, p.a);
    const double y = std::min(b, p.b);
    if (y <= x) continue;
    if (p.harmonic) {
      total += quad::integrate([&p](double s) { return p.value(s); }, x, y,
                               1e-14, 1e-15).value;
    } else {
      total += 0.5 * (y - x) * (p.value(x) + p.value(y));
    }
  }
  return total;
}

double ForceProfile::lag_integral(double a, double b) const {
  if (b < a) {
    throw Error(ErrorCode::InvalidArgument, "lag integral needs a <= b");
  }
  a = clamp_time(a);
  b = clamp_time(b);
  double total = 0.0;
  for (std::size_t i = locate(a); i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.a >= b) break;
    const double x = std::max(a, p.a);
    const double y = std::min(b, p.b);
    if (y <= x) continue;
    if (p.harmonic) {
      total += quad::integrate([&](double s) { return (b - s) * p.value(s); },
                               x, y, 1e-14, 1e-15).value;
    } else {
      // Simpson is exact for the quadratic integrand.
      const double m = 0.5 * (x + y);
      total += (y - x) / 6.0 *
               ((b - x) * p.value(x) + 4.0 * (b - m) * p.value(m) +
                (b - y) * p.value(y));
    }
  }
  return total;
}

double ForceProfile::min_value(double a, double b) const {
  if (b < a) std::swap(a, b);
  a = clamp_time(a);
  b = clamp_time(b);
  double lo = value(a);
  for (std::size_t i = locate(a); i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.a > b || (p.a == b && i > locate(a))) break;
    const double x = std::max(a, p.a);
    const double y = std::min(b, p.b);
    if (p.harmonic) {
      const auto [s_lo, s_hi] =
          sin_range(p.omega * (x - p.a) + p.phase, p.omega * (y - p.a) + p.phase);
      lo = std::min(lo, p.f0 + std::min(p.f1 * s_lo, p.f1 * s_hi));
    } else {
      lo = std::min({lo, p.value(x), p.value(y)});
    }
  }
  return lo;
}

double ForceProfile::max_value(double a, double b) const {
  if (b < a) std::swap(a, b);
  a = clamp_time(a);
  b = clamp_time(b);
  double hi = value(a);
  for (std::size_t i = locate(a); i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.a > b || (p.a == b && i > locate(a))) break;
    const double x = std::max(a, p.a);
    const double y = std::min(b, p.b);
    if (p.harmonic) {
      const auto [s_lo, s_hi] =
          sin_range(p.omega * (x - p.a) + p.phase, p.omega * (y - p.a) + p.phase);
      hi = std::max(hi, p.f0 + std::max(p.f1 * s_lo, p.f1 * s_hi));
    } else {
      hi = std::max({hi, p.value(x), p.value(y)});
    }
  }
  return hi;
}

std::vector<double> ForceProfile::breakpoints() const {
  std::vector<double> out;
  if (pieces_.empty()) return out;
  out.push_back(pieces_.front().a);
  for (const Piece& p : pieces_) out.push_back(p.b);
  return out;
}

bool ForceProfile::piecewise_affine() const {
  return std::none_of(pieces_.begin(), pieces_.end(),
                      [](const Piece& p) { return p.harmonic; });
}

ForceProfile ForceProfile::slice(double a, double b) const {
  if (b < a) {
    throw Error(ErrorCode::InvalidArgument, "slice needs a <= b");
  }
  a = clamp_time(a);
  b = clamp_time(b);
  std::vector<Segment> out;
  for (const Segment& s : segments_) {
    const double x = std::max(a, s.t_begin);
    const double y = std::min(b, s.t_end);
    if (y <= x) continue;
    const double x0 = x - a;
    const double y0 = y - a;
    switch (s.kind) {
      case SegmentKind::Constant:
        out.push_back(Segment::constant(x0, y0, s.params[0]));
        break;
      case SegmentKind::Affine: {
        const double k = (s.params[1] - s.params[0]) / s.length();
        out.push_back(Segment::affine(x0, y0, s.params[0] + k * (x - s.t_begin),
                                      s.params[0] + k * (y - s.t_begin)));
        break;
      }
      case SegmentKind::Harmonic:
        out.push_back(Segment::harmonic(
            x0, y0, s.params[0], s.params[1], s.params[2],
            s.params[3] + s.params[2] * (x - s.t_begin)));
        break;
      case SegmentKind::Sampled:
        if (x == s.t_begin && y == s.t_end) {
          Segment copy = s;
          copy.t_begin = x0;
          copy.t_end = y0;
          out.push_back(std::move(copy));
        } else {
          // A partial window no longer lines up with the node grid.
          for (const Piece& p : pieces_) {
            const double px = std::max(x, p.a);
            const double py = std::min(y, p.b);
            if (py <= px || p.a < s.t_begin || p.b > s.t_end) continue;
            out.push_back(
                Segment::affine(px - a, py - a, p.value(px), p.value(py)));
          }
        }
        break;
    }
  }
  // Re-stitch rounding in the re-based times.
  for (std::size_t i = 1; i < out.size(); ++i) out[i].t_begin = out[i - 1].t_end;
  if (!out.empty()) out.front().t_begin = 0.0;
  return ForceProfile(std::move(out));
}

ForceProfile ForceProfile::append(const ForceProfile& next) const {
  std::vector<Segment> out = segments_;
  const double shift = duration();
  for (Segment s : next.segments_) {
    s.t_begin += shift;
    s.t_end += shift;
    out.push_back(std::move(s));
  }
  for (std::size_t i = 1; i < out.size(); ++i) out[i].t_begin = out[i - 1].t_end;
  return ForceProfile(std::move(out));
}

ForceProfile ForceProfile::extended(double new_duration) const {
  const double dur = duration();
  if (new_duration < dur) {
    throw Error(ErrorCode::InvalidArgument, "extended() cannot shorten");
  }
  if (new_duration == dur || empty()) return *this;
  std::vector<Segment> out = segments_;
  out.push_back(Segment::constant(dur, new_duration, value(dur)));
  return ForceProfile(std::move(out));
}

ForceProfile ForceProfile::blended(double level, double theta) const {
  std::vector<Segment> out = segments_;
  for (Segment& s : out) {
    switch (s.kind) {
      case SegmentKind::Harmonic:
        s.params[0] = (1.0 - theta) * s.params[0] + theta * level;
        s.params[1] *= (1.0 - theta);
        break;
      default:
        for (double& x : s.params) x = (1.0 - theta) * x + theta * level;
        break;
    }
  }
  return ForceProfile(std::move(out));
}

bool ForceProfile::admissible(const FrictionParams& p, double tol) const {
  if (empty()) return false;
  return min_value(0.0, duration()) >= p.backward - tol &&
         max_value(0.0, duration()) <= p.actuator_max + tol;
}

ForceProfile blend_window_to_integral(const ForceProfile& profile, double a,
                                      double b, double target,
                                      const FrictionParams& p) {
  const double current = profile.integral(a, b);
  const double width = b - a;
  if (current == target) return profile;
  const double level = target > current ? p.actuator_max : p.backward;
  const double reach = level * width - current;
  const double theta = (target - current) / reach;
  if (!(theta >= 0.0) || theta > 1.0 + 1e-12 || reach == 0.0) {
    throw Error(ErrorCode::InfeasibleTargets,
                "integral target " + std::to_string(target) +
                    " is outside the force envelope on the window");
  }
  const ForceProfile middle =
      profile.slice(a, b).blended(level, std::min(theta, 1.0));
  return profile.slice(0.0, a).append(middle).append(
      profile.slice(b, profile.duration()));
}

double CumulativeForce::area(double t0, double t1) const {
  if (window_.empty()) return 0.0;
  // Area of C over [t0, t1] = (t1 - t0) C(t0) + lag integral of F over it.
  return (t1 - t0) * value(t0) + window_.lag_integral(t0, t1);
}

CumulativeForce cumulative(const ForceProfile& profile, double begin,
                           double end, CumulativePhase phase) {
  if (end < begin) {
    throw Error(ErrorCode::InvalidArgument, "cumulative window reversed");
  }
  return CumulativeForce(phase, profile.slice(begin, end));
}

}  // namespace wormgait
