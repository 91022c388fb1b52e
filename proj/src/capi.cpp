// Copyright 2026 The dynlpa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dynlpa.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dynlpa/experiment.hpp"
#include "dynlpa/oracle.hpp"

struct dynlpa_config {
  dynlpa::ExperimentConfig cfg;
};

struct dynlpa_result {
  dynlpa::ExperimentSummary summary;
};

namespace {

thread_local std::string g_last_error;

dynlpa_status capture(const std::exception_ptr& eptr) {
  try {
    std::rethrow_exception(eptr);
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DYNLPA_ERR_PARAM;
  } catch (const std::logic_error& e) {
    g_last_error = e.what();
    return DYNLPA_ERR_INTERNAL;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return DYNLPA_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DYNLPA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DYNLPA_ERR_INTERNAL;
  }
}

template <typename Fn>
dynlpa_status guarded(Fn&& fn) {
  try {
    fn();
    return DYNLPA_OK;
  } catch (...) {
    return capture(std::current_exception());
  }
}

size_t copy_out(const std::string& s, char* buf, size_t cap) {
  if (buf && cap > 0) {
    size_t len = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), len);
    buf[len] = '\0';
  }
  return s.size();
}

}  // namespace

extern "C" {

const char* dynlpa_version(void) { return "1.0.0"; }

const char* dynlpa_last_error(void) { return g_last_error.c_str(); }

dynlpa_status dynlpa_config_new(dynlpa_config** out) {
  if (!out) {
    g_last_error = "config_new: out is null";
    return DYNLPA_ERR_PARAM;
  }
  return guarded([&] { *out = new dynlpa_config(); });
}

void dynlpa_config_free(dynlpa_config* config) { delete config; }

dynlpa_status dynlpa_config_set(dynlpa_config* config, const char* key,
                                const char* value) {
  if (!config || !key || !value) {
    g_last_error = "config_set: null argument";
    return DYNLPA_ERR_PARAM;
  }
  return guarded([&] { dynlpa::set_config_key(config->cfg, key, value); });
}

dynlpa_status dynlpa_config_load(dynlpa_config* config, const char* path) {
  if (!config || !path) {
    g_last_error = "config_load: null argument";
    return DYNLPA_ERR_PARAM;
  }
  return guarded([&] { dynlpa::load_config_file(config->cfg, path); });
}

dynlpa_status dynlpa_run(const dynlpa_config* config, dynlpa_result** out) {
  if (!config || !out) {
    g_last_error = "run: null argument";
    return DYNLPA_ERR_PARAM;
  }
  return guarded([&] {
    auto result = std::make_unique<dynlpa_result>();
    result->summary = dynlpa::run_experiment(config->cfg);
    *out = result.release();
  });
}

void dynlpa_result_free(dynlpa_result* result) { delete result; }

uint32_t dynlpa_result_trials(const dynlpa_result* result) {
  return result ? result->summary.config.trials : 0;
}

uint32_t dynlpa_result_successes(const dynlpa_result* result) {
  return result ? result->summary.successes : 0;
}

uint64_t dynlpa_result_total_rounds(const dynlpa_result* result) {
  return result ? result->summary.total_rounds : 0;
}

size_t dynlpa_summary_header(char* buf, size_t cap) {
  return copy_out(dynlpa::ExperimentSummary::csv_header(), buf, cap);
}

size_t dynlpa_result_summary_row(const dynlpa_result* result, char* buf,
                                 size_t cap) {
  if (!result) return 0;
  return copy_out(result->summary.csv_row(), buf, cap);
}

int dynlpa_preset_count(const char* table, uint64_t max_n) {
  if (!table) return -1;
  try {
    return static_cast<int>(dynlpa::table_presets(table, max_n).size());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return -1;
  }
}

dynlpa_status dynlpa_preset_config(const char* table, uint64_t max_n,
                                   int index, dynlpa_config** out) {
  if (!table || !out || index < 0) {
    g_last_error = "preset_config: bad argument";
    return DYNLPA_ERR_PARAM;
  }
  return guarded([&] {
    auto presets = dynlpa::table_presets(table, max_n);
    if (size_t(index) >= presets.size())
      throw std::invalid_argument("preset index out of range");
    auto config = std::make_unique<dynlpa_config>();
    config->cfg = presets[size_t(index)];
    *out = config.release();
  });
}

dynlpa_status dynlpa_oracle_report(uint64_t seed, char* buf, size_t cap) {
  return guarded([&] { copy_out(dynlpa::oracle::oracle_report(seed), buf, cap); });
}

dynlpa_status dynlpa_meg_report(uint64_t seed, char* buf, size_t cap) {
  return guarded([&] {
    dynlpa::MegCheck check = dynlpa::run_meg_check(seed);
    std::ostringstream os;
    os << "markovian stationarity from empty start: density " << check.density
       << " vs " << check.expected_density << " (sigma "
       << check.density_sigma << ") -> "
       << (check.density_ok ? "ok" : "FAIL") << "\n";
    os << "degenerate independent-snapshot run: " << check.meg_successes << "/"
       << check.trials << " vs bernoulli " << check.bernoulli_successes << "/"
       << check.trials << " -> " << (check.success_gap_ok ? "ok" : "FAIL")
       << "\n";
    copy_out(os.str(), buf, cap);
  });
}

}  // extern "C"
