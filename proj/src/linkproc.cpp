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

#include "dynlpa/linkproc.hpp"

#include <cmath>
#include <stdexcept>

namespace dynlpa {

MarkDist mark_dist(double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument(
        "link-proc: p must lie in (0,1] (mark distribution undefined at 0)");
  double s = std::sqrt(1.0 - p);
  return {(s - 1.0 + p) / p, (1.0 - s) * (1.0 - s) / p};
}

EndpointDraw linkproc_draw(const CounterRng& rng, uint32_t round,
                           uint64_t global_pair, int dir, uint64_t rank_bound,
                           const MarkDist& dist) {
  PhiloxBlock b = rng.block(purpose_tag(Purpose::linkproc), round,
                            global_pair * 2 + uint64_t(dir));
  return {CounterRng::reduce(b[0], rank_bound),
          draw_mark(CounterRng::to_u01(b[1]), dist)};
}

uint64_t linkproc_rank_bound(uint64_t n) {
  unsigned __int128 cube = static_cast<unsigned __int128>(n) * n * n;
  if (cube > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
  return static_cast<uint64_t>(cube);
}

std::vector<OrientedEdge> linkproc_orient(const Snapshot& snap,
                                          const PairSpace& pairs,
                                          const CounterRng& rng,
                                          const MarkDist& shared,
                                          const MarkDist* dist_of) {
  std::vector<OrientedEdge> out;
  out.reserve(snap.edges.size());
  const uint64_t bound = linkproc_rank_bound(pairs.partition().n());
  for (const Edge& e : snap.edges) {
    auto [region, idx] = pairs.index_of(e.u, e.v);
    uint64_t gp = pairs.region(region).base + idx;
    const MarkDist& du = dist_of ? dist_of[e.u] : shared;
    const MarkDist& dv = dist_of ? dist_of[e.v] : shared;
    EndpointDraw a = linkproc_draw(rng, snap.t, gp, 0, bound, du);
    EndpointDraw b = linkproc_draw(rng, snap.t, gp, 1, bound, dv);
    OrientedEdge oe{e.u, e.v, false, false};
    if (a.rank > b.rank) {
      oe.u_sees_v = a.mark != -1;
      oe.v_sees_u = -a.mark != -1;
    } else if (a.rank < b.rank) {
      oe.u_sees_v = -b.mark != -1;
      oe.v_sees_u = b.mark != -1;
    }
    // Equal ranks: the endpoints virtually remove each other.
    out.push_back(oe);
  }
  return out;
}

std::vector<std::vector<NodeId>> in_neighbors(
    const std::vector<OrientedEdge>& oriented, uint64_t n) {
  std::vector<std::vector<NodeId>> view(n);
  for (const OrientedEdge& oe : oriented) {
    if (oe.u_sees_v) view[oe.u].push_back(oe.v);
    if (oe.v_sees_u) view[oe.v].push_back(oe.u);
  }
  return view;
}

}  // namespace dynlpa
