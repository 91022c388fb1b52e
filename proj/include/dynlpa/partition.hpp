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

using NodeId = uint32_t;

// Hidden ground-truth assignment of nodes to communities. Nodes are
// assigned in contiguous blocks whose sizes differ by at most one, so
// the assignment is fully determined by (n, r).
class PlantedPartition {
 public:
  // Throws std::invalid_argument for r < 2, n < 2r, or r > n/2.
  PlantedPartition(uint64_t n, uint32_t r = 2);

  uint64_t n() const { return n_; }
  uint32_t r() const { return r_; }

  uint32_t community_of(NodeId v) const;

  // Community i occupies nodes [begin(i), end(i)).
  uint64_t begin(uint32_t i) const { return bounds_[i]; }
  uint64_t end(uint32_t i) const { return bounds_[i + 1]; }
  uint64_t size(uint32_t i) const { return bounds_[i + 1] - bounds_[i]; }

 private:
  uint64_t n_;
  uint32_t r_;
  std::vector<uint64_t> bounds_;  // r+1 entries, bounds_[0]=0, bounds_[r]=n
};

// The candidate pair space, linearized per region so samplers can walk
// pair indices with geometric gaps. Regions 0..r-1 are the intra blocks;
// the remaining C(r,2) regions are the rectangular cross blocks (i,j),
// i<j, in lexicographic order.
struct PairRegion {
  uint32_t id = 0;
  bool intra = false;
  uint32_t ca = 0, cb = 0;  // communities; ca==cb for intra
  uint64_t count = 0;       // number of candidate pairs
  uint64_t base = 0;        // offset into the global pair index
};

class PairSpace {
 public:
  explicit PairSpace(PlantedPartition part);

  const PlantedPartition& partition() const { return part_; }
  const std::vector<PairRegion>& regions() const { return regions_; }
  const PairRegion& region(uint32_t id) const { return regions_[id]; }
  uint64_t total_pairs() const { return total_; }

  // Pair for index `idx` within region `reg`; returns (u,v) with u<v.
  std::pair<NodeId, NodeId> pair_at(const PairRegion& reg, uint64_t idx) const;

  // Region and in-region index of an arbitrary node pair.
  std::pair<uint32_t, uint64_t> index_of(NodeId u, NodeId v) const;

 private:
  PlantedPartition part_;
  std::vector<PairRegion> regions_;
  std::vector<uint32_t> cross_id_;  // r*r lookup for cross region ids
  uint64_t total_ = 0;
};

// Index of (a,b), a<b, in the row-major upper triangle of an m-set.
inline uint64_t tri_index(uint64_t a, uint64_t b, uint64_t m) {
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

// Inverse of tri_index.
std::pair<uint64_t, uint64_t> tri_unindex(uint64_t idx, uint64_t m);

}  // namespace dynlpa
