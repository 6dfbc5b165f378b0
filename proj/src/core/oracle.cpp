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

#include "wormgait/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace wormgait {

OracleOptions OracleOptions::for_period(double period) {
  OracleOptions o;
  o.step = period / 1e5;
  o.event_tol = 1e-12 * period;
  return o;
}

namespace {

// Piece of the signed force between two consecutive breakpoints.
struct ForcePiece {
  double a = 0.0;
  double b = 0.0;
  double local_a = 0.0;  // exact profile-local ends of the piece
  double local_b = 0.0;
  double sign = 1.0;
};

class SignedForce {
 public:
  SignedForce(const ForceProfile& half, double t0) : half_(half), t0_(t0) {}

  std::vector<ForcePiece> pieces(double horizon) const {
    std::vector<ForcePiece> out;
    const double Th = half_.duration();
    const std::vector<double> bp = half_.breakpoints();
    const double t_end = t0_ + horizon;
    for (int k = 0; t0_ + k * Th < t_end; ++k) {
      const double base = t0_ + k * Th;
      for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double a = base + bp[i];
        const double b = std::min(base + bp[i + 1], t_end);
        if (b <= a) continue;
        out.push_back({a, b, bp[i], bp[i + 1], k % 2 == 0 ? 1.0 : -1.0});
        if (b >= t_end) break;
      }
    }
    return out;
  }

  // Force inside a piece; the right end uses the left limit. Local time is
  // measured from the piece start so breakpoints are hit exactly.
  double at(const ForcePiece& p, double t) const {
    const double local = p.local_a + (t - p.a);
    if (local >= p.local_b) return p.sign * half_.left_value(p.local_b);
    return p.sign * half_.value(std::max(local, p.local_a));
  }

 private:
  const ForceProfile& half_;
  double t0_;
};

struct Body2 {
  double x = 0.0;
  double w = 0.0;
  int dir = 0;  // +1 forward, -1 backward, 0 stuck
};

double kinetic_level(int dir, const FrictionParams& p) {
  return dir > 0 ? p.forward : p.backward;
}

// Acceleration of one body with applied actuator force A.
double accel(const Body2& b, double A, const FrictionParams& p) {
  if (b.dir == 0) return 0.0;
  return A + kinetic_friction(b.dir, p);
}

// Direction a body at rest takes under applied force A (0: stays stuck).
int breakaway_direction(double A, const FrictionParams& p) {
  if (A == 0.0) return 0;
  const int s = A > 0.0 ? 1 : -1;
  const double need = std::max(p.breakaway, kinetic_level(s, p));
  return std::abs(A) >= need ? s : 0;
}

struct StepResult {
  std::array<Body2, 2> bodies;
};

// One RK4 step. The accelerations do not depend on the state, so the
// classical stages collapse to closed weights.
StepResult rk4(const std::array<Body2, 2>& y, double t, double h,
               const ForcePiece& piece, const SignedForce& force,
               const FrictionParams& p) {
  const double f0 = force.at(piece, t);
  const double fm = force.at(piece, t + 0.5 * h);
  const double f1 = force.at(piece, t + h);
  StepResult r{y};
  for (std::size_t i = 0; i < 2; ++i) {
    const double sgn = i == 0 ? -1.0 : 1.0;  // tail feels -f, head +f
    const double k1 = accel(y[i], sgn * f0, p);
    const double k2 = accel(y[i], sgn * fm, p);
    const double k4 = accel(y[i], sgn * f1, p);
    // Stages k2 and k3 coincide for state-independent accelerations.
    r.bodies[i].w = y[i].w + h / 6.0 * (k1 + 4.0 * k2 + k4);
    r.bodies[i].x = y[i].x + h * y[i].w + h * h / 6.0 * (k1 + 2.0 * k2);
  }
  return r;
}

// Event function: positive while the body stays in its current regime.
double event_value(const Body2& b, double applied, const FrictionParams& p) {
  if (b.dir != 0) return b.dir * b.w;
  const int s = applied > 0.0 ? 1 : -1;
  return std::max(p.breakaway, kinetic_level(s, p)) - std::abs(applied);
}

WormState to_world(const std::array<Body2, 2>& y, double t) {
  return WormState{t, y[0].x, y[1].x, y[0].w, y[1].w};
}

}  // namespace

OracleTrajectory integrate_ode(const ForceProfile& half_profile,
                               const WormState& init, double t0,
                               double horizon, const FrictionParams& p,
                               const OracleOptions& options) {
  if (!(horizon > 0.0) || !(options.step > 0.0) || half_profile.empty()) {
    throw Error(ErrorCode::InvalidArgument, "oracle needs horizon, step > 0");
  }
  const SignedForce force(half_profile, t0);
  const std::vector<ForcePiece> pieces = force.pieces(horizon);

  std::array<Body2, 2> y{Body2{init.x1, init.x1dot, 0},
                         Body2{init.x2, init.x2dot, 0}};
  auto settle = [&](std::size_t i, double A) {
    if (std::abs(y[i].w) > options.stick_threshold) {
      y[i].dir = y[i].w > 0.0 ? 1 : -1;
    } else {
      y[i].w = 0.0;
      y[i].dir = breakaway_direction(A, p);
    }
  };
  const double f_init = force.at(pieces.front(), t0);
  settle(0, -f_init);
  settle(1, f_init);

  OracleTrajectory out;
  out.nodes.push_back({t0, to_world(y, t0)});
  double interval_d = 0.0;
  std::size_t event_budget = 100000;

  for (const ForcePiece& piece : pieces) {
    double t = piece.a;
    while (t < piece.b) {
      const double remaining = piece.b - t;
      const double n = std::max(1.0, std::ceil(remaining / options.step - 1e-9));
      const double h = n == 1.0 ? remaining : remaining / n;
      StepResult r = rk4(y, t, h, piece, force, p);

      // Earliest body leaving its regime within (0, h].
      double t_hit = std::numeric_limits<double>::infinity();
      int who = -1;
      for (std::size_t i = 0; i < 2; ++i) {
        const double sgn = i == 0 ? -1.0 : 1.0;
        auto e_at = [&](double dt) {
          const StepResult s = dt == 0.0 ? StepResult{y}
                                         : rk4(y, t, dt, piece, force, p);
          return event_value(s.bodies[i], sgn * force.at(piece, t + dt), p);
        };
        const double e_end = e_at(h);
        const bool hit = y[i].dir != 0 ? e_end < 0.0 : e_end <= 0.0;
        if (!hit) continue;
        double lo = 0.0;
        double hi = h;
        while (hi - lo > options.event_tol) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          const double e = e_at(mid);
          const bool past = y[i].dir != 0 ? e < 0.0 : e <= 0.0;
          (past ? hi : lo) = mid;
        }
        if (hi < t_hit) {
          t_hit = hi;
          who = static_cast<int>(i);
        }
      }

      double dt = h;
      if (who >= 0) {
        dt = t_hit;
        r = rk4(y, t, dt, piece, force, p);
      }
      for (std::size_t i = 0; i < 2; ++i) {
        if (y[i].dir != 0) {
          interval_d += kinetic_level(y[i].dir, p) * y[i].dir *
                        (r.bodies[i].x - y[i].x);
        }
        r.bodies[i].dir = y[i].dir;
      }
      y = r.bodies;
      t = (who < 0 && n == 1.0) ? piece.b : t + dt;

      if (who >= 0) {
        if (event_budget-- == 0) {
          throw Error(ErrorCode::Numerical, "oracle event budget exhausted");
        }
        const std::size_t i = static_cast<std::size_t>(who);
        const double sgn = i == 0 ? -1.0 : 1.0;
        y[i].w = 0.0;
        y[i].dir = breakaway_direction(sgn * force.at(piece, t), p);
        out.events.push_back({t, who == 0 ? Body::Tail : Body::Head, y[i].dir != 0});
        out.interval_dissipation.push_back(interval_d);
        out.dissipation += interval_d;
        interval_d = 0.0;
      }
      for (const Body2& b : y) {
        if (!std::isfinite(b.x) || !std::isfinite(b.w)) {
          throw Error(ErrorCode::Numerical,
                      "oracle state became non-finite at t = " + std::to_string(t));
        }
      }
      out.nodes.push_back({t, to_world(y, t)});
    }
  }
  out.interval_dissipation.push_back(interval_d);
  out.dissipation += interval_d;
  return out;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  const double span = static_cast<double>(hi - lo + 1);
  return std::min(hi, lo + static_cast<std::size_t>(uniform() * span));
}

namespace {

std::vector<double> random_cuts(double length, std::size_t pieces, Rng& rng) {
  std::vector<double> cuts{0.0};
  for (std::size_t k = 1; k < pieces; ++k) cuts.push_back(rng.uniform(0.0, length));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(length);
  return cuts;
}

}  // namespace

ForceProfile random_window_profile(double length, double target,
                                   RandomKind kind, Rng& rng,
                                   const FrictionParams& p) {
  if (!(length > 0.0)) return ForceProfile();
  const double lo = p.backward;
  const double hi = p.actuator_max;
  std::vector<Segment> segs;
  switch (kind) {
    case RandomKind::Constant:
    case RandomKind::Affine: {
      const std::vector<double> cuts = random_cuts(length, rng.index(1, 6), rng);
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        if (kind == RandomKind::Constant) {
          segs.push_back(Segment::constant(cuts[k], cuts[k + 1], rng.uniform(lo, hi)));
        } else {
          segs.push_back(Segment::affine(cuts[k], cuts[k + 1], rng.uniform(lo, hi),
                                         rng.uniform(lo, hi)));
        }
      }
      break;
    }
    case RandomKind::Sampled: {
      std::vector<double> nodes(rng.index(2, 12));
      for (double& x : nodes) x = rng.uniform(lo, hi);
      segs.push_back(Segment::sampled(0.0, length, std::move(nodes)));
      break;
    }
    case RandomKind::Harmonic: {
      const double amp = 0.5 * (hi - lo) * rng.uniform();
      const double mean = rng.uniform(lo + amp, hi - amp);
      const double omega =
          rng.uniform(0.5, 6.0) * 2.0 * std::numbers::pi / length;
      segs.push_back(Segment::harmonic(0.0, length, mean, amp, omega,
                                       rng.uniform(0.0, 2.0 * std::numbers::pi)));
      break;
    }
  }
  return blend_window_to_integral(ForceProfile(std::move(segs)), 0.0, length,
                                  target, p);
}

ForceProfile random_admissible_profile(const BoundaryTargets& targets,
                                       const GaitSchedule& s, double tmin,
                                       const FrictionParams& p,
                                       std::uint64_t seed) {
  Rng rng(seed);
  const double T2 = s.T2;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const std::size_t n = rng.index(3, 20);
    std::size_t n1 = rng.index(1, n - 1);
    if (tmin <= 0.0) n1 = 0;
    if (tmin >= T2) n1 = n;
    std::vector<double> cuts{0.0};
    for (double c : random_cuts(tmin, std::max<std::size_t>(n1, 1), rng)) {
      if (c > 0.0 && c < tmin) cuts.push_back(c);
    }
    if (tmin > 0.0 && tmin < T2) cuts.push_back(tmin);
    for (double c : random_cuts(T2 - tmin, std::max<std::size_t>(n - n1, 1), rng)) {
      if (c > 0.0 && c < T2 - tmin) cuts.push_back(tmin + c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(T2);
    std::vector<Segment> segs;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      segs.push_back(Segment::constant(cuts[k], cuts[k + 1],
                                       rng.uniform(p.backward, p.actuator_max)));
    }
    try {
      ForceProfile F(std::move(segs));
      if (tmin > 0.0) F = blend_window_to_integral(F, 0.0, tmin, targets.G_mid, p);
      if (tmin < T2) {
        F = blend_window_to_integral(F, tmin, T2, targets.G_end - targets.G_mid, p);
      }
      return F;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InfeasibleTargets) throw;
    }
  }
  throw Error(ErrorCode::InfeasibleTargets,
              "could not project a random profile onto the G targets");
}

ForceProfile random_gait_profile(const BoundaryTargets& targets,
                                 const GaitSchedule& s, double tmin,
                                 const FrictionParams& p, RandomKind kind,
                                 Rng& rng) {
  const ForceProfile H = random_window_profile(s.T1, targets.H_end, kind, rng, p);
  const ForceProfile G1 = random_window_profile(tmin, targets.G_mid, kind, rng, p);
  const ForceProfile G2 = random_window_profile(
      s.T2 - tmin, targets.G_end - targets.G_mid, kind, rng, p);
  const ForceProfile I = random_window_profile(s.T3, targets.I_end, kind, rng, p);
  return H.append(G1).append(G2).append(I);
}

BruteForceResult brute_force_optimal_G(const BoundaryTargets& targets,
                                       const GaitSchedule& s, double tmin,
                                       const FrictionParams& p,
                                       const std::vector<double>& edges) {
  const std::size_t slots = edges.size() - 1;
  if (edges.size() < 2 || slots > 16) {
    throw Error(ErrorCode::InvalidArgument, "brute force needs 1..16 slots");
  }
  BruteForceResult best;
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    std::vector<Segment> segs;
    for (std::size_t k = 0; k < slots; ++k) {
      const double level = (mask >> k) & 1u ? p.actuator_max : p.backward;
      segs.push_back(Segment::constant(edges[k], edges[k + 1], level));
    }
    ForceProfile F(std::move(segs));
    if (tmin > 0.0) F = blend_window_to_integral(F, 0.0, tmin, targets.G_mid, p);
    if (tmin < s.T2) {
      F = blend_window_to_integral(F, tmin, s.T2, targets.G_end - targets.G_mid, p);
    }
    const double J =
        phase_two_functional(CumulativeForce(CumulativePhase::G, F), tmin);
    ++best.evaluated;
    if (!found || J < best.J) {
      best.J = J;
      best.profile = std::move(F);
      found = true;
    }
  }
  return best;
}

BruteForceResult brute_force_optimal_G(const BoundaryTargets& targets,
                                       const GaitSchedule& s, double tmin,
                                       const FrictionParams& p,
                                       std::size_t slots) {
  if (slots < 1 || slots > 16) {
    throw Error(ErrorCode::InvalidArgument, "brute force needs 1..16 slots");
  }
  std::vector<double> edges;
  for (std::size_t k = 0; k <= slots; ++k) {
    edges.push_back(s.T2 * static_cast<double>(k) / static_cast<double>(slots));
  }
  edges.back() = s.T2;
  return brute_force_optimal_G(targets, s, tmin, p, edges);
}

RandomDraw random_feasible_draw(std::uint64_t seed, bool reachable_L) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FrictionParams fp;
    fp.backward = rng.uniform(0.5, 2.0);
    fp.forward = fp.backward * rng.uniform(0.05, 0.7);
    fp.actuator_max = fp.backward * rng.uniform(1.5, 8.0);
    fp.breakaway = rng.uniform(fp.forward, fp.backward);
    RandomDraw d;
    d.setup.model = WormModel::make(fp);
    d.setup.period = rng.uniform(2.0, 20.0);
    d.setup.u_ratio = rng.uniform();
    d.setup.v_ratio = rng.uniform();
    d.setup.representative = static_cast<Representative>(rng.index(0, 2));
    d.setup.enforce_excursion = false;
    d.T1r = rng.uniform(0.05, 0.95);
    d.tminr = rng.uniform();
    const double L_pick = rng.uniform(0.1, 0.9);
    const double d_pad = rng.uniform(1.0, 5.0);
    try {
      d.design = design_gait_relative(d.setup, d.T1r, d.tminr);
      const GaitDesign& g = d.design;
      const double base = 2.0 * (g.h - g.J);
      const Interval E{base + 2.0 * g.hi.achievable.lo,
                       base + 2.0 * g.hi.achievable.hi};
      d.setup.d1 = std::max(E.hi, 0.0) + d_pad;
      if (reachable_L) {
        d.setup.L = E.at(L_pick);
        d.setup.enforce_excursion = true;
      }
      d.design = design_gait_relative(d.setup, d.T1r, d.tminr);
      return d;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Numerical) throw;
    }
  }
  throw Error(ErrorCode::EmptyRegion, "no feasible random draw found");
}

}  // namespace wormgait
