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

#ifndef WORMGAIT_COMMANDS_HPP
#define WORMGAIT_COMMANDS_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "wormgait/config.hpp"

namespace wormgait {

enum class ExitCode : int {
  Ok = 0,
  Internal = 1,
  ConfigError = 2,
  Infeasible = 3,
  ValidationFailed = 4,
};

/// Exit code for a library error.
ExitCode exit_code_for(ErrorCode code) noexcept;

struct CommandResult {
  ExitCode exit = ExitCode::Ok;
  nlohmann::json report;           // summary written by the command
  std::vector<std::string> files;  // paths written, in order
};

/// trajectory.csv (t, x1, x2, d, v, u, F, mode) and summary.json.
CommandResult run_simulate(const RunConfig& cfg);

/// sweep_grid.csv, argmin.json, force.csv (t, f over one period) and
/// profile.json with the half-period force segments.
CommandResult run_optimize(const RunConfig& cfg);

/// validation.json; exit ValidationFailed unless every check passes.
CommandResult run_validate(const RunConfig& cfg);

/// Runs a command and converts library errors into a result whose report
/// holds {"status": "error", "code", "message"}.
CommandResult run_guarded(CommandResult (*command)(const RunConfig&),
                          const RunConfig& cfg);

}  // namespace wormgait

#endif  // WORMGAIT_COMMANDS_HPP
