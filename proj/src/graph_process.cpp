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

#include "dynlpa/graph_process.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dynlpa {

void geometric_walk(const CounterRng& rng, uint32_t purpose, uint32_t round,
                    uint64_t count, double prob,
                    const std::function<void(uint64_t)>& emit) {
  if (count == 0 || prob <= 0.0) return;
  if (prob >= 1.0) {
    for (uint64_t i = 0; i < count; ++i) emit(i);
    return;
  }
  const double log_fail = std::log1p(-prob);
  uint64_t pos = 0;
  while (pos < count) {
    double u = rng.u01(purpose, round, pos);
    double gap = std::floor(std::log1p(-u) / log_fail);
    if (gap >= static_cast<double>(count - pos)) return;
    pos += static_cast<uint64_t>(gap);
    emit(pos);
    ++pos;
  }
}

double non_homog_pair_prob(const CounterRng& rng, const EdgeModel& model,
                           uint32_t region, uint64_t index) {
  double u = rng.u01(purpose_tag(Purpose::pair_prob, region), 0, index);
  return model.lo_p + (model.hi_p - model.lo_p) * u;
}

DynamicGraphProcess::DynamicGraphProcess(PlantedPartition partition,
                                         EdgeModel model, uint64_t trial_seed)
    : pairs_(std::move(partition)), model_(model), rng_(trial_seed) {
  model_.validate();
  if (model_.kind == EdgeModelKind::markovian) {
    alive_.resize(pairs_.regions().size());
    if (model_.init == MarkovInit::stationary) {
      for (const PairRegion& reg : pairs_.regions()) {
        double pi = reg.intra
                        ? stationary_edge_prob(model_.p_up, model_.p_down)
                        : stationary_edge_prob(model_.q_up, model_.q_down);
        auto& set = alive_[reg.id];
        geometric_walk(rng_, purpose_tag(Purpose::markov_init, reg.id), 0,
                       reg.count, pi, [&](uint64_t i) { set.push_back(i); });
      }
    }
  }
}

void DynamicGraphProcess::sample_bernoulli(uint32_t round,
                                           std::vector<Edge>& out) const {
  const bool non_homog = model_.kind == EdgeModelKind::non_homogeneous;
  for (const PairRegion& reg : pairs_.regions()) {
    if (reg.intra && non_homog) {
      // Candidates at the upper envelope hi_p, thinned per pair so that
      // pair e is present with exactly its fixed p_e.
      if (model_.hi_p <= 0.0) continue;
      uint32_t thin = purpose_tag(Purpose::thinning, reg.id);
      geometric_walk(
          rng_, purpose_tag(Purpose::snapshot_walk, reg.id), round, reg.count,
          model_.hi_p, [&](uint64_t i) {
            double pe = non_homog_pair_prob(rng_, model_, reg.id, i);
            if (rng_.u01(thin, round, i) * model_.hi_p < pe) {
              auto [u, v] = pairs_.pair_at(reg, i);
              out.push_back({u, v});
            }
          });
    } else {
      double prob = reg.intra ? model_.p : model_.q;
      geometric_walk(rng_, purpose_tag(Purpose::snapshot_walk, reg.id), round,
                     reg.count, prob, [&](uint64_t i) {
                       auto [u, v] = pairs_.pair_at(reg, i);
                       out.push_back({u, v});
                     });
    }
  }
}

void DynamicGraphProcess::markov_step(uint32_t round) {
  for (const PairRegion& reg : pairs_.regions()) {
    double up = reg.intra ? model_.p_up : model_.q_up;
    double down = reg.intra ? model_.p_down : model_.q_down;
    std::vector<uint64_t>& cur = alive_[reg.id];

    std::vector<uint64_t> next;
    next.reserve(cur.size() + 16);
    uint32_t death = purpose_tag(Purpose::markov_death, reg.id);
    for (uint64_t i : cur)
      if (rng_.u01(death, round, i) >= down) next.push_back(i);

    // Births are a Bernoulli(up) sample over the whole region; hits that
    // are currently alive are discarded, which leaves exactly an
    // independent Bernoulli(up) birth per absent pair.
    std::vector<uint64_t> births;
    auto alive_it = cur.begin();
    geometric_walk(rng_, purpose_tag(Purpose::markov_birth, reg.id), round,
                   reg.count, up, [&](uint64_t i) {
                     while (alive_it != cur.end() && *alive_it < i) ++alive_it;
                     if (alive_it != cur.end() && *alive_it == i) return;
                     births.push_back(i);
                   });

    std::vector<uint64_t> merged(next.size() + births.size());
    std::merge(next.begin(), next.end(), births.begin(), births.end(),
               merged.begin());
    cur = std::move(merged);
  }
}

void DynamicGraphProcess::materialize_alive(std::vector<Edge>& out) const {
  for (const PairRegion& reg : pairs_.regions())
    for (uint64_t i : alive_[reg.id]) {
      auto [u, v] = pairs_.pair_at(reg, i);
      out.push_back({u, v});
    }
}

Snapshot DynamicGraphProcess::next_snapshot() {
  Snapshot snap;
  snap.t = ++t_;
  if (model_.kind == EdgeModelKind::markovian) {
    markov_step(snap.t);
    materialize_alive(snap.edges);
  } else {
    sample_bernoulli(snap.t, snap.edges);
  }
  std::sort(snap.edges.begin(), snap.edges.end());
  return snap;
}

}  // namespace dynlpa
