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
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dynlpa/partition.hpp"
#include "dynlpa/rules.hpp"

namespace dynlpa {

// k_i: nodes of community i holding its reference label. h_i: nodes of
// community i holding some other community's reference label.
struct LabelCounts {
  std::vector<uint64_t> k;
  std::vector<uint64_t> h;
};

// Exact counts by scan. Reference labels must be pairwise distinct
// (throws std::invalid_argument otherwise).
LabelCounts label_counts(std::span<const Label> labels,
                         const PlantedPartition& part,
                         std::span<const Label> reference_labels);

// True iff every node is labeled, labels are constant within each
// community and pairwise distinct across communities.
bool is_good_labeling(std::span<const Label> labels,
                      const PlantedPartition& part);

// One recorded rule step of a run.
struct TrajectoryRow {
  uint64_t graph_round = 0;
  uint64_t rule_step = 0;
  std::vector<uint64_t> k, h;
  bool good = false;
  bool changed = false;  // any label changed at this step
};

using Trajectory = std::vector<TrajectoryRow>;

// First recorded round after which the labeling is good and never
// changes again through the end; nullopt when the run does not end good.
std::optional<uint64_t> convergence_round(const Trajectory& rows);

// Header `round,k1,..,kr,h1,..,hr`, one row per rule step.
void write_trajectory_csv(std::ostream& os, const Trajectory& rows);

}  // namespace dynlpa
