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

#include "wormgait/wormgait.h"

#include <cstring>
#include <string>
#include <vector>

#include "wormgait/commands.hpp"

struct wg_config {
  wormgait::RunConfig cfg;
};

struct wg_report {
  wg_status status = WG_OK;
  std::string json;
  std::vector<std::string> files;
};

namespace {

thread_local std::string last_error;

wg_status fail(wg_status s, const std::string& message) {
  last_error = message;
  return s;
}

wg_status status_for(wormgait::ExitCode code) {
  return static_cast<wg_status>(static_cast<int>(code));
}

// Runs `body`, translating exceptions into statuses.
template <class F>
wg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const wormgait::Error& e) {
    return fail(status_for(wormgait::exit_code_for(e.code())), e.what());
  } catch (const std::exception& e) {
    return fail(WG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WG_ERR_INTERNAL, "unknown exception");
  }
}

wg_status copy_out(const std::string& value, char* buf, size_t size, size_t* needed) {
  if (needed) *needed = value.size() + 1;
  if (!buf) return WG_OK;
  if (size < value.size() + 1) return fail(WG_ERR_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, value.c_str(), value.size() + 1);
  return WG_OK;
}

wg_status run(wormgait::CommandResult (*command)(const wormgait::RunConfig&),
              const wg_config* cfg, wg_report** out) {
  if (!cfg || !out) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const wormgait::CommandResult r = wormgait::run_guarded(command, cfg->cfg);
    auto* report = new wg_report;
    report->status = status_for(r.exit);
    report->json = r.report.dump(2);
    report->files = r.files;
    *out = report;
    if (report->status != WG_OK) {
      const auto msg = r.report.find("message");
      last_error = msg != r.report.end() && msg->is_string() ? msg->get<std::string>()
                                                             : std::string("command failed");
    }
    return report->status;
  });
}

}  // namespace

extern "C" {

const char* wg_version(void) { return "0.1.0"; }

const char* wg_last_error(void) { return last_error.c_str(); }

const char* wg_status_string(wg_status status) {
  switch (status) {
    case WG_OK: return "ok";
    case WG_ERR_INTERNAL: return "internal error";
    case WG_ERR_CONFIG: return "config error";
    case WG_ERR_INFEASIBLE: return "infeasible";
    case WG_ERR_VALIDATION: return "validation failed";
    case WG_ERR_NULL_ARGUMENT: return "null argument";
    case WG_ERR_BUFFER_TOO_SMALL: return "buffer too small";
  }
  return "unknown status";
}

wg_status wg_config_create(wg_config** out) {
  if (!out) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new wg_config;
    return WG_OK;
  });
}

void wg_config_destroy(wg_config* cfg) { delete cfg; }

wg_status wg_config_load_file(wg_config* cfg, const char* path) {
  if (!cfg || !path) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    wormgait::RunConfig next = cfg->cfg;
    wormgait::apply_config_file(next, path);
    cfg->cfg = std::move(next);
    return WG_OK;
  });
}

wg_status wg_config_load_text(wg_config* cfg, const char* text) {
  if (!cfg || !text) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    wormgait::RunConfig next = cfg->cfg;
    wormgait::apply_config_text(next, text);
    cfg->cfg = std::move(next);
    return WG_OK;
  });
}

wg_status wg_config_set(wg_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    wormgait::set_config_value(cfg->cfg, key, value);
    return WG_OK;
  });
}

wg_status wg_config_override(wg_config* cfg, const char* assignment) {
  if (!cfg || !assignment) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    wormgait::apply_override(cfg->cfg, assignment);
    return WG_OK;
  });
}

wg_status wg_config_get(const wg_config* cfg, const char* key, char* buf, size_t size,
                        size_t* needed) {
  if (!cfg || !key) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { return copy_out(wormgait::get_config_value(cfg->cfg, key), buf, size, needed); });
}

wg_status wg_config_to_text(const wg_config* cfg, char* buf, size_t size, size_t* needed) {
  if (!cfg) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { return copy_out(wormgait::to_text(cfg->cfg), buf, size, needed); });
}

wg_status wg_config_validate(const wg_config* cfg) {
  if (!cfg) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg.validate();
    return WG_OK;
  });
}

wg_status wg_run_simulate(const wg_config* cfg, wg_report** out) {
  return run(wormgait::run_simulate, cfg, out);
}

wg_status wg_run_optimize(const wg_config* cfg, wg_report** out) {
  return run(wormgait::run_optimize, cfg, out);
}

wg_status wg_run_validate(const wg_config* cfg, wg_report** out) {
  return run(wormgait::run_validate, cfg, out);
}

wg_status wg_report_status(const wg_report* report) {
  return report ? report->status : WG_ERR_NULL_ARGUMENT;
}

const char* wg_report_json(const wg_report* report) {
  return report ? report->json.c_str() : "";
}

size_t wg_report_file_count(const wg_report* report) {
  return report ? report->files.size() : 0;
}

const char* wg_report_file(const wg_report* report, size_t index) {
  if (!report || index >= report->files.size()) return nullptr;
  return report->files[index].c_str();
}

void wg_report_destroy(wg_report* report) { delete report; }

wg_status wg_derive_coefficients(double f_fw, double f_bw, double f_0, double f_u,
                                 double out[4]) {
  if (!out) return fail(WG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const wormgait::FrictionParams p{f_fw, f_bw, f_0, f_u};
    try {
      wormgait::validate(p);
    } catch (const wormgait::Error& e) {
      return fail(WG_ERR_CONFIG, e.what());
    }
    const wormgait::DerivedCoefficients c = wormgait::derive_coefficients(p);
    out[0] = c.alpha;
    out[1] = c.beta;
    out[2] = c.rho;
    out[3] = c.eta;
    return WG_OK;
  });
}

}  // extern "C"
