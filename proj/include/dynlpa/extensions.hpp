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

#include "dynlpa/rng.hpp"
#include "dynlpa/rules.hpp"

namespace dynlpa {

// Randomized source election: each node independently becomes a source
// with probability min(1, d*ln(n)/n) and draws a label uniformly from
// [1, n^2]. Returns one entry per node, 0 for non-sources. Duplicate
// labels are permitted. `clamped` (optional) reports whether the election
// probability was clamped to 1.
std::vector<Label> elect_sources(uint64_t n, double d, const CounterRng& rng,
                                 bool* clamped = nullptr);

// Degree estimator of the p-unknown variant: D(S) = S / (rounds*(1-1/n)).
// Throws std::invalid_argument when rounds == 0.
double estimate_degree(uint64_t degree_sum, uint64_t rounds, uint64_t n);

}  // namespace dynlpa
