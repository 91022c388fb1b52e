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
#include <span>
#include <vector>

#include "dynlpa/partition.hpp"

namespace dynlpa {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One round's undirected edge set. Edges are kept sorted and unique, with
// u < v and all endpoints below n by construction.
struct Snapshot {
  uint32_t t = 0;
  std::vector<Edge> edges;
};

// Union of the inputs' edge sets; t is the last input's t. Throws
// std::invalid_argument on an empty sequence.
Snapshot or_union(std::span<const Snapshot> snapshots);

}  // namespace dynlpa
