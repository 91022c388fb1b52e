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
#include <vector>

#include "dynlpa/graph_process.hpp"
#include "dynlpa/linkproc.hpp"
#include "dynlpa/metrics.hpp"
#include "dynlpa/rules.hpp"
#include "dynlpa/schedule.hpp"

namespace dynlpa {

enum class ProtocolVariant { two_source, multi_source };

struct ProtocolConfig {
  ProtocolVariant variant = ProtocolVariant::two_source;
  PhaseSchedule schedule;
  // Nominal intra-edge probability the nodes assume; 0 derives it from
  // the edge model (stationary value for markovian models).
  double protocol_p = 0.0;
  bool p_unknown = false;
  double estimation_c = 30.0;  // estimation rounds = ceil(c * ln n)
  double source_d = 2.0;       // multi-source election constant
  bool record_trajectory = false;
};

struct RunResult {
  std::vector<Label> labels;
  std::vector<Label> reference_labels;  // per community
  bool success = false;
  uint64_t total_graph_rounds = 0;
  std::optional<uint64_t> convergence;  // graph round, when the run ends good
  Trajectory trajectory;                // filled when recording was on
  std::vector<double> degree_estimates;  // p-unknown variant only
};

// Synchronous round-by-round execution of the five-phase protocol over
// externally supplied snapshots. Within a round every node reads the same
// pre-round labels; updates take effect at the next round.
class ProtocolEngine {
 public:
  // `link_p` is the resolved probability nodes plug into link-proc (for
  // stride delta > 1 the caller passes the union-graph probability).
  ProtocolEngine(const PairSpace& pairs, const CounterRng& rng,
                 const ProtocolConfig& cfg, double link_p);

  // Graph rounds the driver must feed, including estimation rounds.
  uint64_t graph_rounds_needed() const;
  bool finished() const { return graph_round_ >= graph_rounds_needed(); }

  // Consumes one graph round.
  void advance(const Snapshot& snap);

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<Label>& reference_labels() const { return reference_; }
  uint64_t rule_step() const { return rule_step_; }
  uint64_t graph_round() const { return graph_round_; }
  const Trajectory& trajectory() const { return trajectory_; }
  const std::vector<double>& degree_estimates() const { return estimates_; }

  RunResult result() const;

 private:
  void init_sources();
  void finalize_estimates();
  void step_rule(const Snapshot& snap);
  void sweep_undirected(const Snapshot& snap, Phase phase);
  void sweep_directed(const Snapshot& snap, Phase phase);
  void see_round(NodeId x, Label z);
  void see_window(NodeId x, Label z);
  void see_majority(NodeId x, Label z);
  void finalize_phase1();
  void finalize_window();
  void finalize_majority();
  void set_label(NodeId x, Label z);
  void record_step();

  const PairSpace& pairs_;
  CounterRng rng_;
  ProtocolConfig cfg_;
  uint64_t n_;
  uint64_t est_rounds_ = 0;

  MarkDist shared_dist_{0.0, 1.0};
  std::vector<MarkDist> node_dist_;  // p-unknown: per-node mark dists

  std::vector<Label> labels_;
  std::vector<uint8_t> frozen_;
  std::vector<Label> reference_;

  // Phase 1 accumulators (whole phase).
  std::vector<UniqueSeen> p1_seen_;
  std::vector<NodeId> p1_touched_;
  std::vector<uint8_t> p1_mark_;

  // Per-round scratch for phases 2-3 (stamped by rule step).
  std::vector<UniqueSeen> round_seen_;
  std::vector<uint64_t> round_stamp_;
  std::vector<NodeId> round_touched_;

  // Phase-4 window accumulators (stamped by window epoch).
  std::vector<UniqueSeen> win_seen_;   // two-source rule
  std::vector<Label> win_min_;         // multi-source rule
  std::vector<uint64_t> win_stamp_;
  std::vector<NodeId> win_touched_;
  uint64_t window_epoch_ = 1;

  // Phase-5 accumulators.
  std::vector<MajorityCounts> maj_;
  std::vector<uint8_t> maj_mark_;
  std::vector<NodeId> maj_touched_;

  std::vector<uint64_t> degree_sum_;
  std::vector<double> estimates_;

  std::vector<Snapshot> union_buf_;
  uint64_t graph_round_ = 0;
  uint64_t rule_step_ = 0;
  bool changed_this_step_ = false;
  uint64_t last_change_round_ = 0;
  Trajectory trajectory_;
};

// Drives a process and an engine to completion.
RunResult run_protocol(DynamicGraphProcess& process, const ProtocolConfig& cfg);

}  // namespace dynlpa
