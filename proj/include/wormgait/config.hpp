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

#ifndef WORMGAIT_CONFIG_HPP
#define WORMGAIT_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wormgait/optimizer.hpp"

namespace wormgait {

enum class Scenario { Design, ConstantForce };

/**
 * @brief Everything a command needs, loaded from `key = value` text.
 *
 * Defaults reproduce the worked example T = 10, f_bw = 1, f_fw = 0.1,
 * f_u = 5, d1 = 40, t1 = 0, L = 32.261, u_ratio = 0.2, v_ratio = 0.5.
 * Precedence: defaults < config file < command-line overrides.
 */
struct RunConfig {
  double f_fw = 0.1;
  double f_bw = 1.0;
  std::optional<double> f_0;  // defaults to f_bw
  double f_u = 5.0;
  double period = 10.0;
  double d1 = 40.0;
  double t1 = 0.0;
  double L = 32.261;
  double u_ratio = 0.2;
  double v_ratio = 0.5;
  double T1r = 0.363635;
  double tminr = 0.563214;
  std::size_t n1 = 101;
  std::size_t n2 = 101;
  unsigned threads = 1;
  std::uint64_t seed = 20260101;
  std::size_t samples = 1000;
  Scenario scenario = Scenario::Design;
  double force = 5.0;  // constant_force scenario
  double v1 = -3.0;    // constant_force scenario
  bool printed_phase_two = false;
  Representative representative = Representative::Balanced;
  bool enforce_excursion = true;
  std::size_t validation_draws = 20;
  std::string output_dir = ".";

  FrictionParams friction() const;
  /// Throws Error(Config) for any violated physical or range invariant.
  void validate() const;
  ProblemSetup setup() const;
};

/// Accepted keys in canonical order.
const std::vector<std::string>& config_keys();

/// Throws Error(Config) for unknown keys or unparsable values.
void set_config_value(RunConfig& cfg, std::string_view key,
                      std::string_view value);

/// Parses `key = value` lines; '#' starts a comment. Later lines win.
void apply_config_text(RunConfig& cfg, std::string_view text,
                       std::string_view origin = "<text>");

/// Applies a file on top of `cfg`. Throws Error(Io) when unreadable.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// `key=value` override as given on a command line.
void apply_override(RunConfig& cfg, std::string_view assignment);

/// Canonical text form; parsing it back yields an identical config.
std::string to_text(const RunConfig& cfg);

std::string get_config_value(const RunConfig& cfg, std::string_view key);

const char* to_string(Scenario s) noexcept;

}  // namespace wormgait

#endif  // WORMGAIT_CONFIG_HPP
