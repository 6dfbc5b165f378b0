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

#ifndef WORMGAIT_SERIALIZATION_HPP
#define WORMGAIT_SERIALIZATION_HPP

#include <string>

#include "json.hpp"
#include "wormgait/force_profile.hpp"
#include "wormgait/optimizer.hpp"

namespace wormgait {

/**
 * @brief Profile as a JSON array of {t_start, t_end, kind, params}.
 *
 * Doubles are written in shortest round-trip form, so parsing the output
 * reproduces the profile bit for bit.
 */
nlohmann::json profile_to_json(const ForceProfile& profile);

/// Throws Error(Config) on a malformed document.
ForceProfile profile_from_json(const nlohmann::json& doc);

std::string profile_to_string(const ForceProfile& profile, int indent = 2);
ForceProfile profile_from_string(const std::string& text);

nlohmann::json to_json(const FrictionParams& p);
nlohmann::json to_json(const DerivedCoefficients& c);
nlohmann::json to_json(const GaitSchedule& s);
nlohmann::json to_json(const GaitDesign& d);
nlohmann::json to_json(const CellResult& c);

/// Fixed-precision rendering used by the CSV writers.
std::string format_double(double x);

}  // namespace wormgait

#endif  // WORMGAIT_SERIALIZATION_HPP
