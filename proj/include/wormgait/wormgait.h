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

/* C interface to the gait library. Handles are opaque; every call that can
 * fail returns a wg_status and leaves a thread-local message readable with
 * wg_last_error(). Status values equal the CLI exit codes where they
 * overlap. */

#ifndef WORMGAIT_WORMGAIT_H
#define WORMGAIT_WORMGAIT_H

#include <stddef.h>

#if defined(WORMGAIT_BUILDING_LIBRARY)
#define WG_API __attribute__((visibility("default")))
#else
#define WG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wg_status {
  WG_OK = 0,
  WG_ERR_INTERNAL = 1,
  WG_ERR_CONFIG = 2,
  WG_ERR_INFEASIBLE = 3,
  WG_ERR_VALIDATION = 4,
  WG_ERR_NULL_ARGUMENT = 5,
  WG_ERR_BUFFER_TOO_SMALL = 6
} wg_status;

typedef struct wg_config wg_config;
typedef struct wg_report wg_report;

WG_API const char* wg_version(void);

/* Message of the last failed call on this thread, "" if none. */
WG_API const char* wg_last_error(void);

WG_API const char* wg_status_string(wg_status status);

/* A config starts at the built-in defaults. */
WG_API wg_status wg_config_create(wg_config** out);
WG_API void wg_config_destroy(wg_config* cfg);

WG_API wg_status wg_config_load_file(wg_config* cfg, const char* path);
WG_API wg_status wg_config_load_text(wg_config* cfg, const char* text);
WG_API wg_status wg_config_set(wg_config* cfg, const char* key, const char* value);

/* "key=value", as given on a command line. */
WG_API wg_status wg_config_override(wg_config* cfg, const char* assignment);

/* Copies the value with its terminator into buf. *needed receives the
 * required size including the terminator; buf may be NULL to query it. */
WG_API wg_status wg_config_get(const wg_config* cfg, const char* key, char* buf,
                               size_t size, size_t* needed);
WG_API wg_status wg_config_to_text(const wg_config* cfg, char* buf, size_t size,
                                   size_t* needed);
WG_API wg_status wg_config_validate(const wg_config* cfg);

/* Each command writes its files into output_dir and returns a report even
 * when it fails; the return value is the command status. */
WG_API wg_status wg_run_simulate(const wg_config* cfg, wg_report** out);
WG_API wg_status wg_run_optimize(const wg_config* cfg, wg_report** out);
WG_API wg_status wg_run_validate(const wg_config* cfg, wg_report** out);

WG_API wg_status wg_report_status(const wg_report* report);
/* JSON document owned by the report. */
WG_API const char* wg_report_json(const wg_report* report);
WG_API size_t wg_report_file_count(const wg_report* report);
WG_API const char* wg_report_file(const wg_report* report, size_t index);
WG_API void wg_report_destroy(wg_report* report);

/* out = {alpha, beta, rho, eta}. */
WG_API wg_status wg_derive_coefficients(double f_fw, double f_bw, double f_0,
                                        double f_u, double out[4]);

#ifdef __cplusplus
}
#endif

#endif /* WORMGAIT_WORMGAIT_H */
