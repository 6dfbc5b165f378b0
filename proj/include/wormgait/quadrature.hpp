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

#ifndef WORMGAIT_QUADRATURE_HPP
#define WORMGAIT_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace wormgait::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  friend bool operator<(const Panel& l, const Panel& r) { return l.error < r.error; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[static_cast<std::size_t>(j)] * sum;
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
  }
  return Panel{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
/// Bisects the panel with the largest error estimate until the summed
/// estimate falls below max(abs_tol, rel_tol * |value|).
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol = 1e-10,
                 double rel_tol = 1e-13, int max_panels = 2000) {
  if (a == b) return {};
  if (b < a) {
    Result r = integrate(f, b, a, abs_tol, rel_tol, max_panels);
    r.value = -r.value;
    return r;
  }
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_15(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(value)) &&
         count < max_panels) {
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      panels.push(worst);
      break;
    }
    const detail::Panel left = detail::gauss_kronrod_15(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of the incremental updates.
  double total = 0.0;
  double total_error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_error += panels.top().error;
    panels.pop();
  }
  return Result{total, total_error, count};
}

/// Integrates piecewise: splits [a, b] at the given breakpoints first so the
/// integrand is smooth on every panel.
template <class F>
Result integrate_split(F&& f, double a, double b,
                       const std::vector<double>& breakpoints,
                       double abs_tol = 1e-10, double rel_tol = 1e-13) {
  std::vector<double> cuts{a};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  Result out;
  const double per_panel_tol =
      abs_tol / static_cast<double>(std::max<std::size_t>(1, cuts.size() - 1));
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    const Result r = integrate(f, cuts[i], cuts[i + 1], per_panel_tol, rel_tol);
    out.value += r.value;
    out.error += r.error;
    out.intervals += r.intervals;
  }
  return out;
}

}  // namespace wormgait::quad

#endif  // WORMGAIT_QUADRATURE_HPP
