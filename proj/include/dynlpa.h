/* Copyright 2026 The dynlpa Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the dynlpa shared library: label-propagation community
 * detection experiments on dynamic planted-partition graphs.
 *
 * All functions returning dynlpa_status use DYNLPA_OK (0) for success;
 * on failure dynlpa_last_error() describes the problem (thread-local).
 * Objects are opaque; release every created object with the matching
 * free function.
 */

#ifndef DYNLPA_H_
#define DYNLPA_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dynlpa_status {
  DYNLPA_OK = 0,
  DYNLPA_ERR_PARAM = 1,    /* invalid parameter or expression */
  DYNLPA_ERR_IO = 2,       /* file could not be read or written */
  DYNLPA_ERR_INTERNAL = 3, /* invariant violation */
} dynlpa_status;

typedef struct dynlpa_config dynlpa_config;
typedef struct dynlpa_result dynlpa_result;

const char* dynlpa_version(void);
const char* dynlpa_last_error(void);

/* ---- experiment configuration ---- */

dynlpa_status dynlpa_config_new(dynlpa_config** out);
void dynlpa_config_free(dynlpa_config* config);

/* Keys mirror the config-file grammar: n, r, p, q, p_up, p_down, q_up,
 * q_down, markov_init, variant, c, c1..c5, d, estimation_c,
 * meg_multiplier, trials, seed, out, trajectories, threads. */
dynlpa_status dynlpa_config_set(dynlpa_config* config, const char* key,
                                const char* value);

/* Applies `key = value` lines from a file ('#' comments allowed). */
dynlpa_status dynlpa_config_load(dynlpa_config* config, const char* path);

/* ---- running ---- */

dynlpa_status dynlpa_run(const dynlpa_config* config, dynlpa_result** out);
void dynlpa_result_free(dynlpa_result* result);

uint32_t dynlpa_result_trials(const dynlpa_result* result);
uint32_t dynlpa_result_successes(const dynlpa_result* result);
uint64_t dynlpa_result_total_rounds(const dynlpa_result* result);

/* CSV summary row (and the shared header). Returns the number of bytes
 * that would be written, snprintf-style. */
size_t dynlpa_summary_header(char* buf, size_t cap);
size_t dynlpa_result_summary_row(const dynlpa_result* result, char* buf,
                                 size_t cap);

/* ---- table presets ---- */

/* Number of configs in a preset grid ("table1", "table2", "table3"),
 * restricted to n <= max_n when max_n > 0. Returns -1 on unknown name. */
int dynlpa_preset_count(const char* table, uint64_t max_n);
dynlpa_status dynlpa_preset_config(const char* table, uint64_t max_n,
                                   int index, dynlpa_config** out);

/* ---- auxiliary reports (verification tooling) ---- */

/* Monte-Carlo re-derivation of the distribution constants the test suite
 * freezes (link orientation rates, stationary densities, union rates). */
dynlpa_status dynlpa_oracle_report(uint64_t seed, char* buf, size_t cap);

/* Markovian-model stationarity / degenerate-independence check. */
dynlpa_status dynlpa_meg_report(uint64_t seed, char* buf, size_t cap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DYNLPA_H_ */
