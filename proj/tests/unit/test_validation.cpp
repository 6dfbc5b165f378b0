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

#include <gtest/gtest.h>

#include "wormgait/validation.hpp"

namespace wormgait {
namespace {

const ValidationCheck* find(const ValidationReport& r, const std::string& name) {
  for (const ValidationCheck& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(Validation, DefaultConfigPassesEveryCheck) {
  RunConfig cfg;
  cfg.validation_draws = 6;
  const ValidationReport r = run_validation(cfg);
  for (const ValidationCheck& c : r.checks) {
    EXPECT_TRUE(c.passed) << c.name << " residual " << c.residual << " " << c.detail;
  }
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.has_attribution);
}

TEST(Validation, PrintedPhaseTwoDurationFailsPeriodicity) {
  RunConfig cfg;
  cfg.validation_draws = 3;
  cfg.printed_phase_two = true;
  const ValidationReport r = run_validation(cfg);
  const ValidationCheck* c = find(r, "periodicity_closed_form");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_GT(c->residual, 0.1);
  EXPECT_FALSE(r.passed());
}

TEST(Validation, ReportIsReproducible) {
  RunConfig cfg;
  cfg.validation_draws = 3;
  cfg.n1 = cfg.n2 = 21;
  const std::string a = to_json(run_validation(cfg)).dump();
  cfg.threads = 3;
  const std::string b = to_json(run_validation(cfg)).dump();
  EXPECT_EQ(a, b);
}

TEST(Attribution, ExplainsTheShiftedOptimum) {
  RunConfig cfg;
  const OptimumAttribution a = optimum_attribution(cfg);
  EXPECT_TRUE(a.interior_minimum);
  EXPECT_LE(a.refined_P_u, a.ref_P_u);
  EXPECT_LE(a.refined_P_u, a.argmin_P_u);
  EXPECT_TRUE(a.gap_exceeds);
  EXPECT_LT(a.ridge_spread, 1e-12);
  EXPECT_NEAR(a.printed_T2, 5.0 * 1.1 / 0.9, 1e-12);
  EXPECT_GT(std::abs(a.printed_u_closure), 0.1);
  EXPECT_LT(std::abs(a.corrected_u_closure), 1e-12);
  // The derived constant reproduces the measured excursion, the printed one
  // does not.
  EXPECT_NEAR(a.E_with_derived_h, a.E_measured, 1e-9);
  EXPECT_GT(std::abs(a.E_with_printed_h - a.E_measured), 1.0);
  EXPECT_LT(a.E_reachable.hi, a.L);
  EXPECT_EQ(a.strict_feasible_cells, 0u);
  EXPECT_FALSE(a.notes.empty());
}

TEST(Attribution, PrintedConstantUsesTheTypesetOffsets) {
  const WormModel m = WormModel::make(FrictionParams{});
  const GaitSchedule s = build_schedule(10.0, 0.3, m.coeffs);
  const double u1 = 3.0, v1 = -4.0, tmin = 1.5;
  const double expected = -v1 * 0.3 - 0.55 * 0.09 / 2.0 + (0.55 * 0.3 + u1) * (2 * tmin - s.T2) +
                          (0.3 + 0.45 * s.T2 + u1) * s.T3 - 0.55 * s.T3 * s.T3 / 2.0;
  EXPECT_NEAR(printed_excursion_constant(s, u1, v1, tmin, m.coeffs), expected, 1e-13);
}

}  // namespace
}  // namespace wormgait
