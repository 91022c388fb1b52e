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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynlpa/edge_model.hpp"
#include "dynlpa/engine.hpp"
#include "dynlpa/schedule.hpp"

namespace dynlpa {

// One experiment: `trials` independent protocol runs over freshly drawn
// dynamic graphs with seeds derived from (seed, trial index).
struct ExperimentConfig {
  uint64_t n = 20000;
  uint32_t r = 2;

  // Edge model. p accepts uniform(..) for the non-homogeneous regime;
  // when p_up is set the model is markovian and p/q are ignored.
  std::string p = "5/n";
  std::string q = "n^-2";
  std::string p_up, p_down, q_up, q_down;
  MarkovInit markov_init = MarkovInit::stationary;

  bool multi_source = false;
  bool p_unknown = false;
  bool sparse = false;  // stride adaptation when p < 1/n
  bool meg = false;     // quiescent gaps (markovian model only)
  double meg_multiplier = 1.0;

  double c = 0.5;                     // per-phase length constant
  std::optional<std::array<double, 5>> c_per_phase;
  double d = 2.0;                     // multi-source election constant
  double estimation_c = 30.0;         // p-unknown estimation constant

  uint32_t trials = 100;
  uint64_t seed = 1;
  std::string out;           // per-trial CSV path, empty = do not write
  bool trajectories = false; // per-trial trajectory CSVs next to `out`
  uint32_t threads = 0;      // 0 = hardware concurrency

  // Resolved pieces (derived, not user-set).
  EdgeModel make_model() const;
  PhaseSchedule make_schedule() const;
  std::string model_name() const;
  std::string variant_name() const;
};

struct TrialRecord {
  uint32_t trial = 0;
  uint64_t seed = 0;
  bool success = false;
  uint64_t rounds = 0;  // schedule rounds (estimation rounds excluded)
  std::optional<uint64_t> convergence_round;
};

struct ExperimentSummary {
  ExperimentConfig config;
  uint32_t successes = 0;
  uint64_t total_rounds = 0;
  std::vector<TrialRecord> records;

  static std::string csv_header();
  std::string csv_row() const;
};

// Runs all trials (in parallel, deterministically) and writes the
// per-trial CSV when config.out is set. Throws std::invalid_argument on
// bad parameters and std::runtime_error (wrapping I/O failures, with the
// path in the message) on write errors.
ExperimentSummary run_experiment(const ExperimentConfig& config);

// Paper reproduction grids. max_n == 0 keeps the full grid.
std::vector<ExperimentConfig> table_presets(const std::string& name,
                                            uint64_t max_n = 0);

// `key = value` assignments; unknown keys throw std::invalid_argument.
void set_config_key(ExperimentConfig& config, const std::string& key,
                    const std::string& value);
// Plain UTF-8 `key = value` lines; '#' starts a comment.
void load_config_file(ExperimentConfig& config, const std::string& path);

// Grid search over c (step 0.1) for the smallest value whose success
// rate reaches `target` (fraction); returns nullopt when none does.
std::optional<double> tune_c(ExperimentConfig config, double c_min,
                             double c_max, double target);

// Markovian-model property check: stationary density from an empty start
// after the mixing bound, and the degenerate independent-snapshot case
// compared against the Bernoulli generator's success rate.
struct MegCheck {
  double density = 0.0;
  double expected_density = 0.0;
  double density_sigma = 0.0;  // std dev of the density estimate
  bool density_ok = false;     // within 3 sigma
  uint32_t meg_successes = 0;
  uint32_t bernoulli_successes = 0;
  uint32_t trials = 0;
  bool success_gap_ok = false;  // within 5 points
};

MegCheck run_meg_check(uint64_t seed);

}  // namespace dynlpa
