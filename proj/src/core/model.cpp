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

#include "wormgait/model.hpp"

#include <array>
#include <cmath>
#include <string>

namespace wormgait {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::EventBoundary: return "event_boundary";
    case ErrorCode::HorizonExceeded: return "horizon_exceeded";
    case ErrorCode::ModeSequence: return "mode_sequence";
    case ErrorCode::InfeasibleTargets: return "infeasible_targets";
    case ErrorCode::InfeasibleExcursion: return "infeasible_excursion";
    case ErrorCode::EmptyRegion: return "empty_region";
    case ErrorCode::NoControlAuthority: return "no_control_authority";
    case ErrorCode::AllCellsInfeasible: return "all_cells_infeasible";
    case ErrorCode::Numerical: return "numerical";
    case ErrorCode::Config: return "config";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

namespace {

// Contact cases 1..8: (force, x1dot, x2dot).
constexpr std::array<std::array<int, 3>, 8> kModeTable{{
    {+1, +1, -1},
    {+1, +1, +1},
    {+1, -1, +1},
    {-1, -1, +1},
    {-1, +1, +1},
    {-1, +1, -1},
    {+1, -1, -1},
    {-1, -1, -1},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

void validate(const FrictionParams& p) {
  require(std::isfinite(p.forward) && std::isfinite(p.backward) &&
              std::isfinite(p.breakaway) && std::isfinite(p.actuator_max),
          "friction parameters must be finite");
  require(p.forward > 0.0, "f_fw must be positive");
  require(p.backward > 0.0, "f_bw must be positive");
  require(p.breakaway > 0.0, "f_0 must be positive");
  require(p.actuator_max > 0.0, "f_u must be positive");
  require(p.forward <= p.backward, "f_fw must not exceed f_bw");
  require(p.actuator_max >= p.backward, "f_u must be at least f_bw");
  require(p.breakaway >= p.forward && p.breakaway <= p.backward,
          "f_0 must lie in [f_fw, f_bw]");
}

DerivedCoefficients derive_coefficients(const FrictionParams& p) {
  validate(p);
  DerivedCoefficients c;
  c.alpha = (p.forward + p.backward) / 2.0;
  c.beta = (p.backward - p.forward) / 2.0;
  c.rho = p.forward / p.backward;
  c.eta = p.actuator_max / p.backward;
  return c;
}

WormModel WormModel::make(const FrictionParams& p) {
  return WormModel{p, derive_coefficients(p)};
}

ConfigState to_config(const WormState& s) {
  return ConfigState{s.t, s.x2 - s.x1, (s.x2dot - s.x1dot) / 2.0,
                     (s.x1dot + s.x2dot) / 2.0};
}

WormState from_config(const ConfigState& c, double x1_anchor) {
  return WormState{c.t, x1_anchor, x1_anchor + c.d, c.u - c.v, c.u + c.v};
}

Mode classify_mode(int force_sign, int tail_sign, int head_sign) {
  if (force_sign == 0 || tail_sign == 0 || head_sign == 0) {
    throw Error(ErrorCode::EventBoundary,
                "zero sign passed to classify_mode; zero velocities are "
                "mode transitions, not modes");
  }
  const int f = force_sign > 0 ? 1 : -1;
  const int a = tail_sign > 0 ? 1 : -1;
  const int b = head_sign > 0 ? 1 : -1;
  for (std::size_t i = 0; i < kModeTable.size(); ++i) {
    const auto& row = kModeTable[i];
    if (row[0] == f && row[1] == a && row[2] == b) {
      const int id = static_cast<int>(i) + 1;
      return Mode{id, f, a, b, id <= 6};
    }
  }
  throw Error(ErrorCode::Numerical, "sign triple missing from mode table");
}

Mode mode_for_case(int case_id) {
  require(case_id >= 1 && case_id <= 8, "case id must be in 1..8");
  const auto& row = kModeTable[static_cast<std::size_t>(case_id - 1)];
  return Mode{case_id, row[0], row[1], row[2], case_id <= 6};
}

double kinetic_friction(int velocity_sign, const FrictionParams& p) {
  return velocity_sign > 0 ? -p.forward : p.backward;
}

ModeRates mode_rates(int case_id, const WormModel& model) {
  const Mode m = mode_for_case(case_id);
  const double f1 = kinetic_friction(m.tail_sign, model.friction);
  const double f2 = kinetic_friction(m.head_sign, model.friction);
  // x1'' = -f + f1, x2'' = f + f2 with f = force_sign * F.
  return ModeRates{static_cast<double>(m.force_sign), (f2 - f1) / 2.0,
                   (f1 + f2) / 2.0};
}

}  // namespace wormgait
