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

#ifndef WORMGAIT_MODEL_HPP
#define WORMGAIT_MODEL_HPP

#include <algorithm>

#include "wormgait/error.hpp"

namespace wormgait {

/**
 * @brief Direction-dependent Coulomb friction levels and the actuator bound.
 *
 * Both bodies have unit mass. A body moving forward (positive velocity) feels
 * a friction force of magnitude `forward` opposing it; moving backward it
 * feels `backward`. `breakaway` is the static level used only by the
 * reference integrator when a body is exactly at rest.
 */
struct FrictionParams {
  double forward = 0.1;       // f_fw
  double backward = 1.0;      // f_bw
  double breakaway = 1.0;     // f_0
  double actuator_max = 5.0;  // f_u
};

/// Constants that appear throughout the closed-form solutions.
struct DerivedCoefficients {
  double alpha = 0.0;  // (f_fw + f_bw) / 2
  double beta = 0.0;   // (f_bw - f_fw) / 2
  double rho = 0.0;    // f_fw / f_bw
  double eta = 0.0;    // f_u / f_bw
};

/// Throws Error(InvalidArgument) unless 0 < f_fw <= f_bw <= f_u,
/// f_fw <= f_0 <= f_bw and every value is finite.
void validate(const FrictionParams& p);

DerivedCoefficients derive_coefficients(const FrictionParams& p);

/// Validated friction parameters bundled with their derived coefficients.
struct WormModel {
  FrictionParams friction;
  DerivedCoefficients coeffs;

  static WormModel make(const FrictionParams& p);
};

/// Physical state of the two bodies (tail x1, head x2).
struct WormState {
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x1dot = 0.0;
  double x2dot = 0.0;
};

/// Configuration-space point: extension d, half relative velocity v and
/// centre-of-mass velocity u.
struct ConfigState {
  double t = 0.0;
  double d = 0.0;
  double v = 0.0;
  double u = 0.0;

  double tail_velocity() const { return u - v; }
  double head_velocity() const { return u + v; }
};

ConfigState to_config(const WormState& s);
WormState from_config(const ConfigState& c, double x1_anchor);

/// One row of the eight-mode table: signs of the actuator force and of the
/// two body velocities.
struct Mode {
  int case_id = 0;
  int force_sign = 0;
  int tail_sign = 0;
  int head_sign = 0;
  bool valid_for_gait = false;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// Throws Error(EventBoundary) when any sign is zero.
Mode classify_mode(int force_sign, int tail_sign, int head_sign);

/// Throws Error(InvalidArgument) for case ids outside 1..8.
Mode mode_for_case(int case_id);

/// Within a mode, dv/dt = force_coeff * F + v_offset and du/dt = u_rate,
/// where F >= 0 is the actuator force magnitude.
struct ModeRates {
  double force_coeff = 0.0;
  double v_offset = 0.0;
  double u_rate = 0.0;
};

/// Rates obtained directly from the two-body equations and the friction law.
ModeRates mode_rates(int case_id, const WormModel& model);

/// Friction force on a body moving with the given velocity sign (+1 / -1).
double kinetic_friction(int velocity_sign, const FrictionParams& p);

/// Closed interval helper; `lo > hi` means empty.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const { return lo > hi; }
  double width() const { return hi - lo; }
  double at(double ratio) const { return (1.0 - ratio) * lo + ratio * hi; }
  bool contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
  double clamp(double x) const { return std::clamp(x, lo, hi); }
};

}  // namespace wormgait

#endif  // WORMGAIT_MODEL_HPP
