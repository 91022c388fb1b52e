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

#include <array>
#include <cstdint>

#include "dynlpa/edge_model.hpp"

namespace dynlpa {

enum class Phase : uint8_t {
  source_labeling = 1,
  fast_labeling = 2,  // phases 2 and 3 share one rule
  saturation = 4,
  majority = 5,
};

// Phase boundaries in rule-step units. With stride delta > 1 a rule step
// consumes the OR-union of the last delta snapshots; with a quiescent
// gap g > 0 each rule step is followed by g idle graph rounds.
struct PhaseSchedule {
  uint64_t tau1 = 0, tau2 = 0, tau3 = 0, tau4 = 0, tau5 = 0;
  uint64_t window_len = 0;    // T4
  uint32_t window_count = 3;  // 3 two-source, 4 multi-source
  uint64_t delta = 1;
  uint64_t quiescent_gap = 0;

  uint64_t rule_steps() const { return tau5; }
  uint64_t graph_rounds() const { return tau5 * delta * (1 + quiescent_gap); }

  Phase phase_of(uint64_t rule_step) const;
  // 0-based window index for a saturation-phase step.
  uint64_t window_of(uint64_t rule_step) const {
    return (rule_step - tau3 - 1) / window_len;
  }
  bool window_ends_at(uint64_t rule_step) const {
    return rule_step > tau3 && rule_step <= tau4 &&
           (rule_step - tau3) % window_len == 0;
  }

  // Throws std::invalid_argument when the taus are not strictly
  // increasing or the window layout is inconsistent.
  void validate() const;
};

// The experimental schedule: every phase runs round(c * log2 n) rounds
// (the scaling the published per-c totals follow), with the saturation
// phase split into window_count equal windows.
PhaseSchedule operational_schedule(uint64_t n, double c,
                                   uint32_t window_count = 3);

// Same with one constant per phase.
PhaseSchedule operational_schedule_per_phase(uint64_t n,
                                             const std::array<double, 5>& c,
                                             uint32_t window_count = 3);

// Constants of the analysis-driven schedule. Defaults are picked so the
// formulas are well defined down to n = 20000 in the sparse regime
// p = Theta(1/n); they produce far longer phases than the experimental
// schedule and are opt-in.
struct TheoreticalConstants {
  double c1 = 32.0;   // source-labeling length multiplier
  double d1 = 32.0;   // lower-bound constant entering underline-k
  double a = 0.1;     // target exponent at the end of fast labeling I
  double phi = 0.002; // slack constant of the fast-labeling I bound
  double gamma = 0.5; // slack constant of the fast-labeling II bound
  double c4 = 1.0;    // per-window length multiplier
  double c5 = 1.0;    // majority-phase length multiplier
};

// Evaluates tau1..tau5 from the phase-end bounds, natural logs, all
// rounded up. Throws std::invalid_argument naming the offending constant
// when a formula operand leaves its validity range.
PhaseSchedule theoretical_schedule(uint64_t n, double p,
                                   const TheoreticalConstants& k = {});

// Stride adaptation for p < 1/n: delta = ceil(1/(pn)) and every rule
// step reads the delta-snapshot union. Returns base unchanged when
// p >= 1/n.
PhaseSchedule sparse_schedule(PhaseSchedule base, double p, uint64_t n);

// Quiescent-gap adaptation for the markovian model: inserts
// mixing_time_bound(model, n, multiplier) idle rounds after each rule
// step. multiplier == 0 returns base unchanged. Throws
// std::invalid_argument for non-markovian models.
PhaseSchedule meg_schedule(PhaseSchedule base, const EdgeModel& model,
                           uint64_t n, double multiplier);

}  // namespace dynlpa
