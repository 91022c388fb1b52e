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
#include <vector>

namespace dynlpa {

// Label 0 means "unlabeled"; protocol labels are >= 1.
using Label = uint64_t;

// Tracks whether exactly one distinct label has been observed. The same
// accumulator backs Phase 1 (whole phase), Phases 2-3 (one round) and
// Phase 4 (one window).
struct UniqueSeen {
  Label label = 0;
  bool conflict = false;

  void add(Label z) {
    if (z == 0 || conflict) return;
    if (label == 0)
      label = z;
    else if (label != z)
      conflict = true;
  }

  // The observed label when exactly one was seen, else 0.
  Label unique() const { return conflict ? 0 : label; }
};

// Phase 1: an unlabeled node adopts the unique label it saw across the
// whole phase; with zero or several distinct labels it stays unlabeled.
inline Label phase1_finalize(const UniqueSeen& seen, Label current) {
  if (current != 0) return current;
  return seen.unique();
}

// Phases 2-3: an unlabeled node adopts the unique distinct label visible
// this round; labeled nodes never change.
inline Label phase23_apply(Label current, const UniqueSeen& round_seen) {
  if (current != 0) return current;
  return round_seen.unique();
}

// Phase 4 window (two-source rule): any node that saw exactly one
// distinct label over the window adopts it; otherwise it keeps what it
// had (possibly nothing).
inline Label phase4_finalize(Label current, const UniqueSeen& window_seen) {
  Label z = window_seen.unique();
  return z != 0 ? z : current;
}

// Phase 4 window (multi-source rule): running minimum of own label and
// everything observed; 0 means "nothing yet".
inline Label min_label_step(Label candidate, Label seen) {
  if (seen == 0) return candidate;
  if (candidate == 0 || seen < candidate) return seen;
  return candidate;
}

inline Label min_label_finalize(Label current, Label candidate) {
  if (candidate == 0) return current;
  if (current == 0 || candidate < current) return candidate;
  return current;
}

// Phase 5 accumulated per-label neighbor counts f_i.
struct MajorityCounts {
  std::vector<std::pair<Label, uint64_t>> counts;

  void add(Label z, uint64_t weight = 1) {
    if (z == 0) return;
    for (auto& [label, count] : counts)
      if (label == z) {
        count += weight;
        return;
      }
    counts.emplace_back(z, weight);
  }

  uint64_t count_of(Label z) const {
    for (const auto& [label, count] : counts)
      if (label == z) return count;
    return 0;
  }
};

// Phase 5 decision: the label with the largest accumulated sum wins;
// ties break to the smallest label. With no observations at all the node
// keeps its prior label (or stays unlabeled).
inline Label phase5_decide(Label current, const MajorityCounts& sums) {
  Label best = 0;
  uint64_t best_count = 0;
  for (const auto& [label, count] : sums.counts) {
    if (count > best_count || (count == best_count && count > 0 &&
                               (best == 0 || label < best))) {
      best = label;
      best_count = count;
    }
  }
  return best_count > 0 ? best : current;
}

}  // namespace dynlpa
