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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wormgait/wormgait.h"

namespace {

struct Options {
  std::string config_path;
  std::string output_dir;
  std::vector<std::string> overrides;
  unsigned threads = 0;
  std::string seed;
  bool print_json = false;
};

using ConfigPtr = std::unique_ptr<wg_config, decltype(&wg_config_destroy)>;
using ReportPtr = std::unique_ptr<wg_report, decltype(&wg_report_destroy)>;

std::string json_escape(const char* text) {
  std::string out;
  for (const char* c = text; *c; ++c) {
    if (*c == '"' || *c == '\\') out += '\\';
    if (static_cast<unsigned char>(*c) >= 0x20) out += *c;
  }
  return out;
}

int report_error(wg_status status, const char* stage) {
  std::fprintf(stderr, "{\"status\": \"error\", \"stage\": \"%s\", \"code\": %d, \"message\": \"%s\"}\n",
               stage, static_cast<int>(status), json_escape(wg_last_error()).c_str());
  return static_cast<int>(status);
}

// Defaults < config file < --output/--threads/--seed < --set, in order.
wg_status build_config(const Options& opt, ConfigPtr& cfg) {
  wg_status s = WG_OK;
  if (!opt.config_path.empty() && (s = wg_config_load_file(cfg.get(), opt.config_path.c_str())) != WG_OK) {
    return s;
  }
  if (!opt.output_dir.empty() && (s = wg_config_set(cfg.get(), "output_dir", opt.output_dir.c_str())) != WG_OK) {
    return s;
  }
  if (opt.threads > 0 &&
      (s = wg_config_set(cfg.get(), "threads", std::to_string(opt.threads).c_str())) != WG_OK) {
    return s;
  }
  if (!opt.seed.empty() && (s = wg_config_set(cfg.get(), "seed", opt.seed.c_str())) != WG_OK) {
    return s;
  }
  for (const std::string& o : opt.overrides) {
    if ((s = wg_config_override(cfg.get(), o.c_str())) != WG_OK) return s;
  }
  return wg_config_validate(cfg.get());
}

int run_command(const Options& opt, wg_status (*command)(const wg_config*, wg_report**),
                const char* name) {
  wg_config* raw = nullptr;
  if (wg_config_create(&raw) != WG_OK) return report_error(WG_ERR_INTERNAL, "config");
  ConfigPtr cfg(raw, wg_config_destroy);
  if (const wg_status s = build_config(opt, cfg); s != WG_OK) return report_error(s, "config");

  wg_report* out = nullptr;
  const wg_status status = command(cfg.get(), &out);
  if (!out) return report_error(status, name);
  ReportPtr report(out, wg_report_destroy);
  if (opt.print_json) std::printf("%s\n", wg_report_json(report.get()));
  if (status != WG_OK && status != WG_ERR_VALIDATION) {
    if (!opt.print_json) std::fprintf(stderr, "%s\n", wg_report_json(report.get()));
    return static_cast<int>(status);
  }
  for (size_t i = 0; i < wg_report_file_count(report.get()); ++i) {
    std::printf("wrote %s\n", wg_report_file(report.get(), i));
  }
  std::printf("%s: %s\n", name, wg_status_string(status));
  return static_cast<int>(status);
}

int show_config(const Options& opt) {
  wg_config* raw = nullptr;
  if (wg_config_create(&raw) != WG_OK) return report_error(WG_ERR_INTERNAL, "config");
  ConfigPtr cfg(raw, wg_config_destroy);
  if (const wg_status s = build_config(opt, cfg); s != WG_OK) return report_error(s, "config");
  size_t needed = 0;
  wg_config_to_text(cfg.get(), nullptr, 0, &needed);
  std::string text(needed, '\0');
  wg_config_to_text(cfg.get(), text.data(), text.size(), &needed);
  std::fputs(text.c_str(), stdout);
  return 0;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("-c,--config", opt.config_path, "key = value config file")->check(CLI::ExistingFile);
  sub->add_option("-o,--output", opt.output_dir, "output directory");
  sub->add_option("--set", opt.overrides, "override as key=value (repeatable)");
  sub->add_option("--threads", opt.threads, "sweep worker threads");
  sub->add_option("--seed", opt.seed, "seed for the randomized suites");
  sub->add_flag("--json", opt.print_json, "print the report JSON to stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mass worm gait design, simulation and validation"};
  app.set_version_flag("--version", std::string(wg_version()));
  app.require_subcommand(1);
  Options opt;

  CLI::App* simulate = app.add_subcommand("simulate", "simulate one period of the configured gait");
  CLI::App* optimize = app.add_subcommand("optimize", "sweep (T1r, Tminr) and export the optimal force");
  CLI::App* validate = app.add_subcommand("validate", "run the oracle and identity checks");
  CLI::App* config = app.add_subcommand("config", "print the resolved configuration");
  for (CLI::App* sub : {simulate, optimize, validate, config}) add_common(sub, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(WG_ERR_CONFIG);
  }
  if (simulate->parsed()) return run_command(opt, wg_run_simulate, "simulate");
  if (optimize->parsed()) return run_command(opt, wg_run_optimize, "optimize");
  if (validate->parsed()) return run_command(opt, wg_run_validate, "validate");
  return show_config(opt);
}
