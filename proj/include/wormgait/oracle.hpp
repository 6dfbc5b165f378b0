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

#ifndef WORMGAIT_ORACLE_HPP
#define WORMGAIT_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "wormgait/constraints.hpp"
#include "wormgait/optimizer.hpp"

namespace wormgait {

/// Reference integrator settings. The integrator never uses the closed
/// forms: it works on (x1, x2, x1dot, x2dot) with the raw friction law.
struct OracleOptions {
  double step = 1e-4;             // target RK4 step
  double event_tol = 1e-12;       // bisection width for events
  double stick_threshold = 1e-12; // |velocity| treated as rest

  /// step = T / 1e5, event_tol = 1e-12 T.
  static OracleOptions for_period(double period);
};

struct OracleEvent {
  double t = 0.0;
  Body body = Body::Head;
  bool breakaway = true;  // false: the body stuck
};

struct OracleNode {
  double t = 0.0;
  WormState state;
};

struct OracleTrajectory {
  std::vector<OracleNode> nodes;  // every step end, starting with t0
  std::vector<OracleEvent> events;
  /// Friction dissipation between consecutive events (each >= 0).
  std::vector<double> interval_dissipation;
  double dissipation = 0.0;

  const WormState& final_state() const { return nodes.back().state; }
};

/// Integrates x1'' = -f + f1, x2'' = f + f2 with the signed force
/// f(t) = +-F from the antisymmetric extension of `half_profile`, starting
/// at t0. Steps are cut at every force breakpoint; velocity zeros are found
/// by bisection and resolved with static friction f_0 (non-strict
/// breakaway). Throws Error(Numerical) on non-finite states.
OracleTrajectory integrate_ode(const ForceProfile& half_profile,
                               const WormState& init, double t0,
                               double horizon, const FrictionParams& p,
                               const OracleOptions& options);

/// Deterministic generator: mt19937_64 with a fixed bit-to-double map so
/// draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
};

enum class RandomKind { Constant, Affine, Sampled, Harmonic };

/// Random admissible F on [0, length] of the given kind whose running
/// integral ends at `target`.
ForceProfile random_window_profile(double length, double target,
                                   RandomKind kind, Rng& rng,
                                   const FrictionParams& p);

/// Phase-two profile with N in [3, 20] random levels (Tmin is always a
/// breakpoint), blended toward a bound on [0, Tmin] and [Tmin, T2] so it
/// meets G_mid and G_end exactly. Deterministic in `seed`.
ForceProfile random_admissible_profile(const BoundaryTargets& targets,
                                       const GaitSchedule& s, double tmin,
                                       const FrictionParams& p,
                                       std::uint64_t seed);

/// Half-period profile with random pieces in all three phases that still
/// meets every boundary target.
ForceProfile random_gait_profile(const BoundaryTargets& targets,
                                 const GaitSchedule& s, double tmin,
                                 const FrictionParams& p, RandomKind kind,
                                 Rng& rng);

struct BruteForceResult {
  ForceProfile profile;
  double J = 0.0;
  std::size_t evaluated = 0;
};

/// Exhaustive {f_bw, f_u} search on `slots` uniform slots over [0, T2]
/// (slots <= 16), each candidate projected onto the G_mid / G_end targets.
BruteForceResult brute_force_optimal_G(const BoundaryTargets& targets,
                                       const GaitSchedule& s, double tmin,
                                       const FrictionParams& p,
                                       std::size_t slots);

/// Same search on explicit slot edges (first 0, last T2).
BruteForceResult brute_force_optimal_G(const BoundaryTargets& targets,
                                       const GaitSchedule& s, double tmin,
                                       const FrictionParams& p,
                                       const std::vector<double>& edges);

/// Random feasible problem instance with its design. When `reachable_L` is
/// set, L is drawn inside the excursion range the design can attain.
struct RandomDraw {
  ProblemSetup setup;
  double T1r = 0.0;
  double tminr = 0.0;
  GaitDesign design;
};

RandomDraw random_feasible_draw(std::uint64_t seed, bool reachable_L = true);

}  // namespace wormgait

#endif  // WORMGAIT_ORACLE_HPP
