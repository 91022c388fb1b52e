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

#include "dynlpa/partition.hpp"
#include "dynlpa/rng.hpp"
#include "dynlpa/snapshot.hpp"

namespace dynlpa {

// Per-round randomized edge orientation. Each endpoint of a present edge
// draws a rank M uniform on [n^3] and a mark C in {+1,-1,0}; the higher
// rank's mark decides both directions, and equal ranks drop the edge.
// The surviving direction u<-v (v visible to u) appears with probability
// 1 - sqrt(1-p) per pair, independently across directions and pairs.

// Mark distribution for protocol parameter p in (0,1].
struct MarkDist {
  double p_one;   // P(C = +1) = P(C = -1) = (sqrt(1-p) - 1 + p) / p
  double p_zero;  // P(C = 0)  = (1 - sqrt(1-p))^2 / p
};

// Throws std::invalid_argument for p outside (0,1].
MarkDist mark_dist(double p);

inline int8_t draw_mark(double u, const MarkDist& d) {
  if (u < d.p_one) return 1;
  if (u < 2.0 * d.p_one) return -1;
  return 0;
}

// Raw draws of one endpoint for one present edge. `dir` is 0 for the
// lower-id endpoint and 1 for the higher-id one.
struct EndpointDraw {
  uint64_t rank;
  int8_t mark;
};

EndpointDraw linkproc_draw(const CounterRng& rng, uint32_t round,
                           uint64_t global_pair, int dir, uint64_t rank_bound,
                           const MarkDist& dist);

struct OrientedEdge {
  NodeId u, v;      // u < v
  bool u_sees_v;    // v is an in-neighbor of u
  bool v_sees_u;
};

// rank_bound for n nodes: min(n^3, 2^64-1).
uint64_t linkproc_rank_bound(uint64_t n);

// Orients every edge of the snapshot. When `dist_of` is null all nodes
// use `shared`; otherwise node x draws its mark from dist_of[x]
// (p-unknown variant, each node trusting its own degree estimate).
std::vector<OrientedEdge> linkproc_orient(const Snapshot& snap,
                                          const PairSpace& pairs,
                                          const CounterRng& rng,
                                          const MarkDist& shared,
                                          const MarkDist* dist_of = nullptr);

// In-neighbor lists per node; tests and the oracle use this view, the
// engine consumes OrientedEdge directly.
std::vector<std::vector<NodeId>> in_neighbors(
    const std::vector<OrientedEdge>& oriented, uint64_t n);

}  // namespace dynlpa
