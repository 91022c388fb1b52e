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

namespace dynlpa {

enum class EdgeModelKind {
  two_block,        // intra pairs Bernoulli(p), cross pairs Bernoulli(q)
  non_homogeneous,  // per intra pair a fixed p_e in [d1/n, d2/n]; cross q
  markovian,        // per-pair 2-state chain (p_up,p_down) / (q_up,q_down)
};

enum class MarkovInit {
  stationary,  // sample E_0 from the chains' stationary distribution
  empty,
};

struct EdgeModel {
  EdgeModelKind kind = EdgeModelKind::two_block;

  // two_block
  double p = 0.0;
  double q = 0.0;

  // non_homogeneous: p_e uniform in [lo_p, hi_p] per intra pair, cross q
  double lo_p = 0.0;
  double hi_p = 0.0;

  // markovian
  double p_up = 0.0, p_down = 0.0;
  double q_up = 0.0, q_down = 0.0;
  MarkovInit init = MarkovInit::stationary;

  static EdgeModel two_block(double p, double q);
  static EdgeModel non_homogeneous(double lo_p, double hi_p, double q);
  static EdgeModel markovian(double p_up, double p_down, double q_up,
                             double q_down,
                             MarkovInit init = MarkovInit::stationary);

  // Expected intra-pair edge probability (stationary for markovian).
  double mean_intra_prob() const;
  // Same for cross pairs.
  double mean_cross_prob() const;

  // Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

// Stationary on-probability of a 2-state chain: up / (up + down).
// Throws std::invalid_argument when up + down == 0.
double stationary_edge_prob(double up, double down);

// ceil(multiplier * max{1/(p_up+p_down), 1/(q_up+q_down), ln n}).
// Throws std::invalid_argument for non-markovian models.
uint64_t mixing_time_bound(const EdgeModel& model, uint64_t n,
                           double multiplier);

}  // namespace dynlpa
