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

#ifndef WORMGAIT_ERROR_HPP
#define WORMGAIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wormgait {

enum class ErrorCode {
  InvalidArgument,
  EventBoundary,       // a zero velocity was passed where a mode was expected
  HorizonExceeded,     // no velocity crossing inside the search horizon
  ModeSequence,        // trajectory left the 1..6 case sequence
  InfeasibleTargets,   // boundary targets violate the force envelopes
  InfeasibleExcursion, // E(T) = L cannot be met by any admissible H/I pair
  EmptyRegion,
  NoControlAuthority,  // f_u == f_bw
  AllCellsInfeasible,
  Numerical,
  Config,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wormgait

#endif  // WORMGAIT_ERROR_HPP
