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

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "wormgait/config.hpp"

namespace wormgait {
namespace {

ErrorCode code_of(void (*f)(RunConfig&), RunConfig cfg = {}) {
  try {
    f(cfg);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Numerical;  // sentinel: nothing thrown
}

TEST(Config, DefaultsAreTheWorkedExample) {
  const RunConfig c;
  EXPECT_NO_THROW(c.validate());
  const FrictionParams p = c.friction();
  EXPECT_DOUBLE_EQ(p.backward, 1.0);
  EXPECT_DOUBLE_EQ(p.breakaway, 1.0);
  EXPECT_DOUBLE_EQ(c.setup().L, 32.261);
  EXPECT_DOUBLE_EQ(c.setup().d1, 40.0);
}

TEST(Config, ParsesCommentsAndLaterLinesWin) {
  RunConfig c;
  apply_config_text(c, "# header\nT = 12   # period\n\nf_0 = 0.5\nT=14\nrepresentative = phase_one_first\n"
                       "enforce_excursion = no\nscenario = constant_force\n");
  EXPECT_DOUBLE_EQ(c.period, 14.0);
  EXPECT_DOUBLE_EQ(c.friction().breakaway, 0.5);
  EXPECT_EQ(c.representative, Representative::PhaseOneFirst);
  EXPECT_FALSE(c.enforce_excursion);
  EXPECT_EQ(c.scenario, Scenario::ConstantForce);
}

TEST(Config, UnknownKeysAndBadValuesAreRejected) {
  EXPECT_EQ(code_of([](RunConfig& c) { apply_config_text(c, "f_bww = 1\n"); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { apply_config_text(c, "T = ten\n"); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { apply_config_text(c, "T 10\n"); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { apply_config_text(c, "n1 = -3\n"); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { apply_config_text(c, "printed_phase_two = maybe\n"); }),
            ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { apply_override(c, "threads"); }), ErrorCode::Config);
}

TEST(Config, ValidationCatchesPhysicalInvariants) {
  EXPECT_EQ(code_of([](RunConfig& c) { c.period = 0.0; c.validate(); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { c.f_fw = 2.0; c.validate(); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { c.u_ratio = 1.5; c.validate(); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) { c.n1 = 1; c.validate(); }), ErrorCode::Config);
  EXPECT_EQ(code_of([](RunConfig& c) {
              c.scenario = Scenario::ConstantForce;
              c.force = 0.5;
              c.validate();
            }),
            ErrorCode::Config);
}

TEST(Config, CanonicalTextRoundTrips) {
  RunConfig c;
  apply_config_text(c, "f_fw = 0.123456789012345678\nL = 1e-3\nseed = 18446744073709551615\n"
                       "output_dir = out dir\n");
  RunConfig back;
  apply_config_text(back, to_text(c));
  EXPECT_EQ(to_text(back), to_text(c));
  EXPECT_EQ(back.f_fw, c.f_fw);
  EXPECT_EQ(back.seed, 18446744073709551615ull);
  EXPECT_EQ(back.output_dir, "out dir");
  const std::string text = to_text(c);
  EXPECT_EQ(config_keys().size(),
            static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')));
}

TEST(Config, FileLoadingAndMissingFiles) {
  const std::string path = ::testing::TempDir() + "wormgait_cfg_test.cfg";
  {
    std::ofstream out(path);
    out << "d1 = 55\nL = 20\n";
  }
  RunConfig c;
  apply_config_file(c, path);
  EXPECT_DOUBLE_EQ(c.d1, 55.0);
  std::remove(path.c_str());
  EXPECT_EQ(code_of([](RunConfig& c) { apply_config_file(c, "/nonexistent/x.cfg"); }),
            ErrorCode::Io);
  EXPECT_EQ(get_config_value(c, "f_0"), "auto");
}

}  // namespace
}  // namespace wormgait
