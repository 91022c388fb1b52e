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
#include <functional>
#include <vector>

#include "dynlpa/edge_model.hpp"
#include "dynlpa/partition.hpp"
#include "dynlpa/rng.hpp"
#include "dynlpa/snapshot.hpp"

namespace dynlpa {

// Emits the indices i in [0, count) of an i.i.d. Bernoulli(prob) sequence
// in increasing order, visiting only the successes. The gap after position
// `pos` is derived from the draw addressed (purpose, round, pos), so the
// sequence is a pure function of the key and the address — the oracles
// re-derive it index by index.
void geometric_walk(const CounterRng& rng, uint32_t purpose, uint32_t round,
                    uint64_t count, double prob,
                    const std::function<void(uint64_t)>& emit);

// Fixed per-pair intra probability of the non-homogeneous model, derived
// once from the trial key (round 0 of the pair_prob stream).
double non_homog_pair_prob(const CounterRng& rng, const EdgeModel& model,
                           uint32_t region, uint64_t index);

// Stateful per-round snapshot generator. One instance is a sequential
// state machine owned by a single trial; distinct trials use distinct
// derived seeds and may run concurrently.
class DynamicGraphProcess {
 public:
  DynamicGraphProcess(PlantedPartition partition, EdgeModel model,
                      uint64_t trial_seed);

  // Samples round t+1 and advances t. For the markovian model the new
  // alive set depends only on the previous one.
  Snapshot next_snapshot();

  uint32_t t() const { return t_; }
  const PairSpace& pairs() const { return pairs_; }
  const EdgeModel& model() const { return model_; }
  const CounterRng& rng() const { return rng_; }

  // Current alive pair indices per region (markovian only).
  const std::vector<std::vector<uint64_t>>& alive() const { return alive_; }

 private:
  void sample_bernoulli(uint32_t round, std::vector<Edge>& out) const;
  void markov_step(uint32_t round);
  void materialize_alive(std::vector<Edge>& out) const;

  PairSpace pairs_;
  EdgeModel model_;
  CounterRng rng_;
  uint32_t t_ = 0;
  std::vector<std::vector<uint64_t>> alive_;  // sorted, markovian only
};

}  // namespace dynlpa
