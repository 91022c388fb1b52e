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

#include "dynlpa/metrics.hpp"

#include <ostream>
#include <stdexcept>

namespace dynlpa {

LabelCounts label_counts(std::span<const Label> labels,
                         const PlantedPartition& part,
                         std::span<const Label> reference_labels) {
  const uint32_t r = part.r();
  if (reference_labels.size() != r)
    throw std::invalid_argument("label_counts: need one reference per community");
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i + 1; j < r; ++j)
      if (reference_labels[i] != 0 && reference_labels[i] == reference_labels[j])
        throw std::invalid_argument("label_counts: reference labels must differ");
  LabelCounts out;
  out.k.assign(r, 0);
  out.h.assign(r, 0);
  for (uint32_t i = 0; i < r; ++i) {
    for (uint64_t v = part.begin(i); v < part.end(i); ++v) {
      Label z = labels[v];
      if (z == 0) continue;
      if (z == reference_labels[i]) {
        ++out.k[i];
        continue;
      }
      for (uint32_t j = 0; j < r; ++j)
        if (j != i && z == reference_labels[j]) {
          ++out.h[i];
          break;
        }
    }
  }
  return out;
}

bool is_good_labeling(std::span<const Label> labels,
                      const PlantedPartition& part) {
  const uint32_t r = part.r();
  std::vector<Label> rep(r, 0);
  for (uint32_t i = 0; i < r; ++i) {
    rep[i] = labels[part.begin(i)];
    if (rep[i] == 0) return false;
    for (uint64_t v = part.begin(i) + 1; v < part.end(i); ++v)
      if (labels[v] != rep[i]) return false;
  }
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i + 1; j < r; ++j)
      if (rep[i] == rep[j]) return false;
  return true;
}

std::optional<uint64_t> convergence_round(const Trajectory& rows) {
  if (rows.empty() || !rows.back().good) return std::nullopt;
  // Labels are frozen after the last changing step, so the labeling is
  // good from there on iff it is good at the end.
  uint64_t round = rows.front().graph_round;
  for (const TrajectoryRow& row : rows)
    if (row.changed) round = row.graph_round;
  return round;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& rows) {
  if (rows.empty()) return;
  const size_t r = rows.front().k.size();
  os << "round";
  for (size_t i = 1; i <= r; ++i) os << ",k" << i;
  for (size_t i = 1; i <= r; ++i) os << ",h" << i;
  os << "\n";
  for (const TrajectoryRow& row : rows) {
    os << row.graph_round;
    for (uint64_t v : row.k) os << "," << v;
    for (uint64_t v : row.h) os << "," << v;
    os << "\n";
  }
}

}  // namespace dynlpa
