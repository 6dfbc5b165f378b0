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

#include "wormgait/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace wormgait {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            const char* expected) {
  throw Error(ErrorCode::Config, "invalid value '" + std::string(value) +
                                     "' for " + std::string(key) + " (" +
                                     expected + ")");
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    bad_value(key, v, "finite number");
  }
  return out;
}

std::uint64_t parse_uint(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, v, "non-negative integer");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, v, "true or false");
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Field {
  std::string key;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class M>
Field number(const char* key, M RunConfig::*member) {
  return {key,
          [=](RunConfig& c, std::string_view v) {
            if constexpr (std::is_same_v<M, double>) {
              c.*member = parse_double(key, v);
            } else {
              c.*member = static_cast<M>(parse_uint(key, v));
            }
          },
          [=](const RunConfig& c) {
            if constexpr (std::is_same_v<M, double>) {
              return fmt(c.*member);
            } else {
              return std::to_string(c.*member);
            }
          }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back(number("f_fw", &RunConfig::f_fw));
    f.push_back(number("f_bw", &RunConfig::f_bw));
    f.push_back({"f_0",
                 [](RunConfig& c, std::string_view v) {
                   if (v == "auto") {
                     c.f_0.reset();
                   } else {
                     c.f_0 = parse_double("f_0", v);
                   }
                 },
                 [](const RunConfig& c) {
                   return c.f_0 ? fmt(*c.f_0) : std::string("auto");
                 }});
    f.push_back(number("f_u", &RunConfig::f_u));
    f.push_back(number("T", &RunConfig::period));
    f.push_back(number("d1", &RunConfig::d1));
    f.push_back(number("t1", &RunConfig::t1));
    f.push_back(number("L", &RunConfig::L));
    f.push_back(number("u_ratio", &RunConfig::u_ratio));
    f.push_back(number("v_ratio", &RunConfig::v_ratio));
    f.push_back(number("T1r", &RunConfig::T1r));
    f.push_back(number("Tminr", &RunConfig::tminr));
    f.push_back(number("n1", &RunConfig::n1));
    f.push_back(number("n2", &RunConfig::n2));
    f.push_back(number("threads", &RunConfig::threads));
    f.push_back(number("seed", &RunConfig::seed));
    f.push_back(number("samples", &RunConfig::samples));
    f.push_back({"scenario",
                 [](RunConfig& c, std::string_view v) {
                   if (v == "design") {
                     c.scenario = Scenario::Design;
                   } else if (v == "constant_force") {
                     c.scenario = Scenario::ConstantForce;
                   } else {
                     bad_value("scenario", v, "design or constant_force");
                   }
                 },
                 [](const RunConfig& c) { return std::string(to_string(c.scenario)); }});
    f.push_back(number("force", &RunConfig::force));
    f.push_back(number("v1", &RunConfig::v1));
    f.push_back({"printed_phase_two",
                 [](RunConfig& c, std::string_view v) {
                   c.printed_phase_two = parse_bool("printed_phase_two", v);
                 },
                 [](const RunConfig& c) {
                   return std::string(c.printed_phase_two ? "true" : "false");
                 }});
    f.push_back({"representative",
                 [](RunConfig& c, std::string_view v) {
                   try {
                     c.representative = representative_from_string(v);
                   } catch (const Error&) {
                     bad_value("representative", v,
                               "balanced, phase_one_first or phase_three_first");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(to_string(c.representative));
                 }});
    f.push_back({"enforce_excursion",
                 [](RunConfig& c, std::string_view v) {
                   c.enforce_excursion = parse_bool("enforce_excursion", v);
                 },
                 [](const RunConfig& c) {
                   return std::string(c.enforce_excursion ? "true" : "false");
                 }});
    f.push_back(number("validation_draws", &RunConfig::validation_draws));
    f.push_back({"output_dir",
                 [](RunConfig& c, std::string_view v) {
                   if (v.empty()) bad_value("output_dir", v, "non-empty path");
                   c.output_dir = std::string(v);
                 },
                 [](const RunConfig& c) { return c.output_dir; }});
    return f;
  }();
  return table;
}

const Field& field(std::string_view key) {
  for (const Field& f : fields()) {
    if (f.key == key) return f;
  }
  throw Error(ErrorCode::Config, "unknown config key '" + std::string(key) + "'");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::Config, what);
}

}  // namespace

const char* to_string(Scenario s) noexcept {
  return s == Scenario::Design ? "design" : "constant_force";
}

FrictionParams RunConfig::friction() const {
  return FrictionParams{f_fw, f_bw, f_0.value_or(f_bw), f_u};
}

void RunConfig::validate() const {
  try {
    wormgait::validate(friction());
  } catch (const Error& e) {
    throw Error(ErrorCode::Config, e.what());
  }
  require(period > 0.0, "T must be positive");
  require(d1 > 0.0, "d1 must be positive");
  require(L > 0.0, "L must be positive");
  require(u_ratio >= 0.0 && u_ratio <= 1.0, "u_ratio must lie in [0, 1]");
  require(v_ratio >= 0.0 && v_ratio <= 1.0, "v_ratio must lie in [0, 1]");
  require(T1r >= 0.0 && T1r <= 1.0, "T1r must lie in [0, 1]");
  require(tminr >= 0.0 && tminr <= 1.0, "Tminr must lie in [0, 1]");
  require(n1 >= 2 && n2 >= 2, "n1 and n2 must be at least 2");
  require(threads >= 1, "threads must be at least 1");
  require(samples >= 1, "samples must be at least 1");
  require(validation_draws >= 1, "validation_draws must be at least 1");
  if (scenario == Scenario::ConstantForce) {
    require(force > f_bw && force <= f_u, "force must lie in (f_bw, f_u]");
    require(v1 < 0.0, "v1 must be negative for a gait start");
  } else {
    require(f_fw < f_bw, "the design scenario needs f_fw < f_bw");
  }
}

ProblemSetup RunConfig::setup() const {
  ProblemSetup s;
  s.model = WormModel::make(friction());
  s.period = period;
  s.start = t1;
  s.d1 = d1;
  s.L = L;
  s.u_ratio = u_ratio;
  s.v_ratio = v_ratio;
  s.representative = representative;
  s.enforce_excursion = enforce_excursion;
  return s;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const Field& f : fields()) k.push_back(f.key);
    return k;
  }();
  return keys;
}

void set_config_value(RunConfig& cfg, std::string_view key,
                      std::string_view value) {
  field(trim(key)).set(cfg, trim(value));
}

std::string get_config_value(const RunConfig& cfg, std::string_view key) {
  return field(trim(key)).get(cfg);
}

void apply_config_text(RunConfig& cfg, std::string_view text,
                       std::string_view origin) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::Config, std::string(origin) + ":" +
                                         std::to_string(line_no) +
                                         ": expected key = value");
    }
    try {
      set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::Config, std::string(origin) + ":" +
                                         std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str(), path);
}

void apply_override(RunConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::Config,
                "override '" + std::string(assignment) + "' is not key=value");
  }
  set_config_value(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

std::string to_text(const RunConfig& cfg) {
  std::string out;
  for (const Field& f : fields()) out += f.key + " = " + f.get(cfg) + "\n";
  return out;
}

}  // namespace wormgait
