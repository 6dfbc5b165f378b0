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

#ifndef WORMGAIT_FORCE_PROFILE_HPP
#define WORMGAIT_FORCE_PROFILE_HPP

#include <string_view>
#include <vector>

#include "wormgait/model.hpp"

namespace wormgait {

enum class SegmentKind { Constant, Affine, Sampled, Harmonic };

const char* to_string(SegmentKind kind) noexcept;
SegmentKind segment_kind_from_string(std::string_view name);

/**
 * @brief One piece of an actuator force magnitude.
 *
 * Parameter layout by kind:
 *  - Constant: {level}
 *  - Affine:   {F(t_begin), F(t_end)}
 *  - Sampled:  {F_0, ..., F_n}, n >= 1 uniformly spaced nodes, linear in
 *              between
 *  - Harmonic: {mean, amplitude, omega, phase},
 *              F(t) = mean + amplitude * sin(omega * (t - t_begin) + phase)
 */
struct Segment {
  double t_begin = 0.0;
  double t_end = 0.0;
  SegmentKind kind = SegmentKind::Constant;
  std::vector<double> params;

  static Segment constant(double t0, double t1, double level);
  static Segment affine(double t0, double t1, double f0, double f1);
  static Segment sampled(double t0, double t1, std::vector<double> nodes);
  static Segment harmonic(double t0, double t1, double mean, double amplitude,
                          double omega, double phase);

  double length() const { return t_end - t_begin; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/**
 * @brief Piecewise-continuous force magnitude F on [0, duration].
 *
 * Profiles are stored relative to the start of the window they describe
 * (normally t1 = 0 and duration T/2). The signed actuator force over a full
 * period follows the antisymmetric rule f(t) = F(t) on [0, T/2) and
 * f(t) = -F(t - T/2) on [T/2, T).
 *
 * Integrals of constant, affine and sampled segments are exact; harmonic
 * segments go through adaptive quadrature.
 */
class ForceProfile {
 public:
  ForceProfile() = default;

  /// Segments must be contiguous and start at 0. Zero-length segments are
  /// dropped.
  explicit ForceProfile(std::vector<Segment> segments);

  static ForceProfile constant(double level, double duration);

  bool empty() const { return segments_.empty(); }
  double duration() const;
  const std::vector<Segment>& segments() const { return segments_; }

  /// Right-continuous; value(duration()) is the left limit.
  double value(double t) const;

  /// Left limit at t (value(0) at t = 0).
  double left_value(double t) const;

  /// Antisymmetric periodic extension with period 2 * duration().
  double signed_value(double t) const;

  double integral(double a, double b) const;

  /// Integral of (b - s) F(s) over [a, b], i.e. the area under the running
  /// integral of F started at a.
  double lag_integral(double a, double b) const;

  double min_value(double a, double b) const;
  double max_value(double a, double b) const;

  /// Piece boundaries including 0 and duration(); sampled segments
  /// contribute every node.
  std::vector<double> breakpoints() const;

  /// True when no harmonic segment is present, so F is affine between
  /// consecutive breakpoints.
  bool piecewise_affine() const;

  /// Restriction to [a, b], re-based so the result starts at 0.
  ForceProfile slice(double a, double b) const;

  /// Concatenation; `next` is shifted to start at duration().
  ForceProfile append(const ForceProfile& next) const;

  /// Prolongs the profile to a longer window by holding the final value.
  ForceProfile extended(double new_duration) const;

  /// (1 - theta) * F + theta * level, which keeps the segment kinds.
  ForceProfile blended(double level, double theta) const;

  /// F in [f_bw, f_u] everywhere (within tol).
  bool admissible(const FrictionParams& p, double tol = 1e-12) const;

  friend bool operator==(const ForceProfile& a, const ForceProfile& b) {
    return a.segments_ == b.segments_;
  }

 private:
  struct Piece {
    double a = 0.0;
    double b = 0.0;
    bool harmonic = false;
    double f0 = 0.0;  // affine: value at a / harmonic: mean
    double f1 = 0.0;  // affine: value at b / harmonic: amplitude
    double omega = 0.0;
    double phase = 0.0;  // harmonic phase at a

    double value(double t) const;
  };

  void build_pieces();
  double clamp_time(double t) const;
  std::size_t locate(double t) const;

  std::vector<Segment> segments_;
  std::vector<Piece> pieces_;
};

/// Rescales F toward `level` (f_bw or f_u) so that its integral over
/// [a, b] equals `target`, touching nothing outside that window. Returns the
/// profile unchanged when it already matches. Throws
/// Error(InfeasibleTargets) when the target is out of reach.
ForceProfile blend_window_to_integral(const ForceProfile& profile, double a,
                                      double b, double target,
                                      const FrictionParams& p);

enum class CumulativePhase { H, G, I };

/// Running integral of F over one phase window, measured from the phase
/// start. Nondecreasing with slope in [f_bw, f_u] for admissible profiles.
class CumulativeForce {
 public:
  CumulativeForce(CumulativePhase phase, ForceProfile window)
      : phase_(phase), window_(std::move(window)) {}

  CumulativePhase phase() const { return phase_; }
  double length() const { return window_.duration(); }
  const ForceProfile& window() const { return window_; }

  double value(double tau) const {
    return window_.empty() ? 0.0 : window_.integral(0.0, tau);
  }
  double end_value() const { return value(length()); }

  /// Integral of the running integral over [0, length()].
  double area() const {
    return window_.empty() ? 0.0 : window_.lag_integral(0.0, length());
  }

  /// Integral of the running integral over [t0, t1].
  double area(double t0, double t1) const;

 private:
  CumulativePhase phase_;
  ForceProfile window_;
};

/// Throws Error(InvalidArgument) when [begin, end] leaves the profile.
CumulativeForce cumulative(const ForceProfile& profile, double begin,
                           double end, CumulativePhase phase);

}  // namespace wormgait

#endif  // WORMGAIT_FORCE_PROFILE_HPP
