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
#include <map>
#include <set>
#include <vector>

#include "dynlpa/engine.hpp"
#include "dynlpa/graph_process.hpp"

// Unoptimized reference implementations used by the test suite. They
// favor obviousness over speed: full per-pair scans, one node at a time,
// std::set / std::map state. Where bit-exact equivalence with the
// production path is asserted they consume the same counter-based draw
// addresses; the `independent` mode uses its own per-pair stream and is
// compared distributionally.

namespace dynlpa::oracle {

enum class DrawMode {
  shared,       // replay the production draw addresses (bit-exact)
  independent,  // own per-pair Bernoulli stream (distributional)
};

// Per-pair snapshot generator; guards n <= 2000.
class NaiveDynamicGraph {
 public:
  NaiveDynamicGraph(PlantedPartition partition, EdgeModel model,
                    uint64_t trial_seed, DrawMode mode = DrawMode::shared);

  Snapshot next_snapshot();
  uint32_t t() const { return t_; }
  const PairSpace& pairs() const { return pairs_; }

 private:
  bool pair_present_bernoulli(const PairRegion& reg, uint64_t j,
                              uint32_t round, uint64_t& next_hit);
  PairSpace pairs_;
  EdgeModel model_;
  CounterRng rng_;
  DrawMode mode_;
  uint32_t t_ = 0;
  std::vector<std::vector<uint8_t>> alive_;  // markovian per-pair flags
};

// Straight-line transcription of the per-node labeling rules, driven one
// rule application at a time. The caller feeds the same snapshots (or
// unions) that the production engine consumes.
class NaiveProtocol {
 public:
  NaiveProtocol(const PairSpace& pairs, const CounterRng& rng,
                const ProtocolConfig& cfg, double link_p);

  // Applies the rule of the current step to one snapshot.
  void rule_round(const Snapshot& snap);
  // Convenience driver replicating stride / quiescent-gap handling.
  void advance(const Snapshot& snap);

  std::vector<Label> labels() const;
  uint64_t rule_step() const { return step_; }

 private:
  struct NodeState {
    Label label = 0;
    bool frozen = false;
    std::set<Label> phase1_seen;
    std::set<Label> window_seen;
    Label window_min = 0;
    std::map<Label, uint64_t> majority;
  };

  std::vector<std::vector<NodeId>> directed_in_neighbors(const Snapshot& s);

  const PairSpace& pairs_;
  CounterRng rng_;
  ProtocolConfig cfg_;
  MarkDist dist_;
  std::vector<NodeState> nodes_;
  std::vector<Snapshot> buffer_;
  uint64_t step_ = 0;
  uint64_t graph_round_ = 0;
};

// Monte-Carlo frequencies of the link-proc procedure over independent
// pair-rounds at edge probability p.
struct LinkprocStats {
  uint64_t pair_rounds = 0;
  uint64_t edges = 0;            // pair-rounds with the edge present
  uint64_t retained_fwd = 0;     // u<-v direction kept (of all pair-rounds)
  uint64_t retained_bwd = 0;
  uint64_t retained_both = 0;
  uint64_t mark_counts[3] = {0, 0, 0};  // C = +1, -1, 0 among present edges
};

LinkprocStats linkproc_stats(double p, uint64_t pair_rounds, uint64_t seed);

// Re-derives the Monte-Carlo constants the unit tests freeze and checks
// the fast generator against the per-pair oracle; returns a plain-text
// report.
std::string oracle_report(uint64_t seed);

}  // namespace dynlpa::oracle
