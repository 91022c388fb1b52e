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

#include "dynlpa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dynlpa/extensions.hpp"

namespace dynlpa {

ProtocolEngine::ProtocolEngine(const PairSpace& pairs, const CounterRng& rng,
                               const ProtocolConfig& cfg, double link_p)
    : pairs_(pairs), rng_(rng), cfg_(cfg), n_(pairs.partition().n()) {
  cfg_.schedule.validate();
  shared_dist_ = mark_dist(link_p);
  if (cfg_.p_unknown) {
    est_rounds_ = static_cast<uint64_t>(
        std::ceil(cfg_.estimation_c * std::log(static_cast<double>(n_))));
    if (est_rounds_ == 0)
      throw std::invalid_argument("p-unknown variant needs estimation rounds");
    degree_sum_.assign(n_, 0);
  }
  labels_.assign(n_, 0);
  frozen_.assign(n_, 0);
  p1_seen_.assign(n_, {});
  p1_mark_.assign(n_, 0);
  round_seen_.assign(n_, {});
  round_stamp_.assign(n_, 0);
  win_stamp_.assign(n_, 0);
  if (cfg_.variant == ProtocolVariant::multi_source)
    win_min_.assign(n_, 0);
  else
    win_seen_.assign(n_, {});
  maj_.assign(n_, {});
  maj_mark_.assign(n_, 0);
  init_sources();
}

void ProtocolEngine::init_sources() {
  const PlantedPartition& part = pairs_.partition();
  reference_.assign(part.r(), 0);
  if (cfg_.variant == ProtocolVariant::two_source) {
    // One designated source per community, frozen for the whole run.
    for (uint32_t i = 0; i < part.r(); ++i) {
      NodeId s = NodeId(part.begin(i));
      labels_[s] = i + 1;
      frozen_[s] = 1;
      reference_[i] = i + 1;
    }
  } else {
    labels_ = elect_sources(n_, cfg_.source_d, rng_);
    // Reference label of a community: the minimum among its sources.
    for (uint32_t i = 0; i < part.r(); ++i) {
      Label best = 0;
      for (uint64_t v = part.begin(i); v < part.end(i); ++v)
        if (labels_[v] != 0 && (best == 0 || labels_[v] < best))
          best = labels_[v];
      reference_[i] = best;
    }
  }
}

uint64_t ProtocolEngine::graph_rounds_needed() const {
  return est_rounds_ + cfg_.schedule.graph_rounds();
}

void ProtocolEngine::finalize_estimates() {
  estimates_.resize(n_);
  node_dist_.resize(n_);
  const double n = static_cast<double>(n_);
  for (uint64_t v = 0; v < n_; ++v) {
    estimates_[v] = estimate_degree(degree_sum_[v], est_rounds_, n_);
    // A node trusts its own estimate; zero-degree nodes fall back to the
    // minimal analyzed regime p = 1/n so the mark distribution stays
    // defined.
    double p_hat = std::clamp(estimates_[v] / n, 1.0 / n, 1.0);
    node_dist_[v] = mark_dist(p_hat);
  }
}

void ProtocolEngine::advance(const Snapshot& snap) {
  if (finished()) throw std::logic_error("protocol engine already finished");
  ++graph_round_;
  if (graph_round_ <= est_rounds_) {
    for (const Edge& e : snap.edges) {
      ++degree_sum_[e.u];
      ++degree_sum_[e.v];
    }
    if (graph_round_ == est_rounds_) finalize_estimates();
    return;
  }
  const uint64_t g = graph_round_ - est_rounds_;
  if (cfg_.schedule.delta > 1) {
    union_buf_.push_back(snap);
    if (g % cfg_.schedule.delta != 0) return;
    Snapshot merged = or_union(union_buf_);
    union_buf_.clear();
    step_rule(merged);
    return;
  }
  if (cfg_.schedule.quiescent_gap > 0 &&
      (g - 1) % (1 + cfg_.schedule.quiescent_gap) != 0)
    return;  // quiescent round
  step_rule(snap);
}

void ProtocolEngine::set_label(NodeId x, Label z) {
  if (z == 0 || labels_[x] == z) return;
  labels_[x] = z;
  changed_this_step_ = true;
}

void ProtocolEngine::see_round(NodeId x, Label z) {
  if (z == 0) return;
  if (round_stamp_[x] != rule_step_) {
    round_stamp_[x] = rule_step_;
    round_seen_[x] = {};
    round_touched_.push_back(x);
  }
  round_seen_[x].add(z);
}

void ProtocolEngine::see_window(NodeId x, Label z) {
  if (z == 0) return;
  if (win_stamp_[x] != window_epoch_) {
    win_stamp_[x] = window_epoch_;
    if (cfg_.variant == ProtocolVariant::multi_source)
      win_min_[x] = 0;
    else
      win_seen_[x] = {};
    win_touched_.push_back(x);
  }
  if (cfg_.variant == ProtocolVariant::multi_source)
    win_min_[x] = min_label_step(win_min_[x], z);
  else
    win_seen_[x].add(z);
}

void ProtocolEngine::see_majority(NodeId x, Label z) {
  if (z == 0) return;
  if (!maj_mark_[x]) {
    maj_mark_[x] = 1;
    maj_touched_.push_back(x);
  }
  maj_[x].add(z);
}

void ProtocolEngine::sweep_undirected(const Snapshot& snap, Phase phase) {
  if (phase == Phase::source_labeling) {
    for (const Edge& e : snap.edges) {
      if (labels_[e.v] != 0) {
        if (!p1_mark_[e.u]) {
          p1_mark_[e.u] = 1;
          p1_touched_.push_back(e.u);
        }
        p1_seen_[e.u].add(labels_[e.v]);
      }
      if (labels_[e.u] != 0) {
        if (!p1_mark_[e.v]) {
          p1_mark_[e.v] = 1;
          p1_touched_.push_back(e.v);
        }
        p1_seen_[e.v].add(labels_[e.u]);
      }
    }
    return;
  }
  // Fast labeling: only unlabeled nodes can adopt, so only their views
  // are collected.
  for (const Edge& e : snap.edges) {
    if (labels_[e.u] == 0) see_round(e.u, labels_[e.v]);
    if (labels_[e.v] == 0) see_round(e.v, labels_[e.u]);
  }
  for (NodeId x : round_touched_)
    set_label(x, phase23_apply(labels_[x], round_seen_[x]));
  round_touched_.clear();
}

void ProtocolEngine::sweep_directed(const Snapshot& snap, Phase phase) {
  std::vector<OrientedEdge> oriented = linkproc_orient(
      snap, pairs_, rng_, shared_dist_,
      node_dist_.empty() ? nullptr : node_dist_.data());
  for (const OrientedEdge& oe : oriented) {
    if (phase == Phase::saturation) {
      if (oe.u_sees_v) see_window(oe.u, labels_[oe.v]);
      if (oe.v_sees_u) see_window(oe.v, labels_[oe.u]);
    } else {
      if (oe.u_sees_v) see_majority(oe.u, labels_[oe.v]);
      if (oe.v_sees_u) see_majority(oe.v, labels_[oe.u]);
    }
  }
}

void ProtocolEngine::finalize_phase1() {
  for (NodeId x : p1_touched_) {
    if (frozen_[x] || labels_[x] != 0) continue;
    set_label(x, phase1_finalize(p1_seen_[x], labels_[x]));
  }
  p1_touched_.clear();
}

void ProtocolEngine::finalize_window() {
  for (NodeId x : win_touched_) {
    if (frozen_[x]) continue;
    Label nl = cfg_.variant == ProtocolVariant::multi_source
                   ? min_label_finalize(labels_[x], win_min_[x])
                   : phase4_finalize(labels_[x], win_seen_[x]);
    set_label(x, nl);
  }
  win_touched_.clear();
  ++window_epoch_;
}

void ProtocolEngine::finalize_majority() {
  for (NodeId x : maj_touched_) {
    if (frozen_[x]) continue;
    set_label(x, phase5_decide(labels_[x], maj_[x]));
  }
  maj_touched_.clear();
}

void ProtocolEngine::step_rule(const Snapshot& snap) {
  ++rule_step_;
  changed_this_step_ = false;
  const Phase phase = cfg_.schedule.phase_of(rule_step_);
  if (phase == Phase::source_labeling || phase == Phase::fast_labeling)
    sweep_undirected(snap, phase);
  else
    sweep_directed(snap, phase);

  if (rule_step_ == cfg_.schedule.tau1) finalize_phase1();
  if (cfg_.schedule.window_ends_at(rule_step_)) finalize_window();
  if (rule_step_ == cfg_.schedule.tau5) finalize_majority();

  if (changed_this_step_) last_change_round_ = graph_round_;
  if (cfg_.record_trajectory) record_step();
}

void ProtocolEngine::record_step() {
  TrajectoryRow row;
  row.graph_round = graph_round_;
  row.rule_step = rule_step_;
  LabelCounts counts = label_counts(labels_, pairs_.partition(), reference_);
  row.k = std::move(counts.k);
  row.h = std::move(counts.h);
  row.good = is_good_labeling(labels_, pairs_.partition());
  row.changed = changed_this_step_;
  trajectory_.push_back(row);
}

RunResult ProtocolEngine::result() const {
  RunResult res;
  res.labels = labels_;
  res.reference_labels = reference_;
  res.success = is_good_labeling(labels_, pairs_.partition());
  res.total_graph_rounds = graph_rounds_needed();
  if (res.success)
    res.convergence = last_change_round_;
  res.trajectory = trajectory_;
  res.degree_estimates = estimates_;
  return res;
}

RunResult run_protocol(DynamicGraphProcess& process,
                       const ProtocolConfig& cfg) {
  double p_eff = cfg.protocol_p > 0.0 ? cfg.protocol_p
                                      : process.model().mean_intra_prob();
  // A rule step of the strided variant reads the delta-round union, whose
  // per-pair probability is 1-(1-p)^delta.
  double link_p = cfg.schedule.delta > 1
                      ? 1.0 - std::pow(1.0 - p_eff, double(cfg.schedule.delta))
                      : p_eff;
  ProtocolEngine engine(process.pairs(), process.rng(), cfg, link_p);
  while (!engine.finished()) engine.advance(process.next_snapshot());
  return engine.result();
}

}  // namespace dynlpa
