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

#include "dynlpa/extensions.hpp"

#include <cmath>
#include <stdexcept>

namespace dynlpa {

std::vector<Label> elect_sources(uint64_t n, double d, const CounterRng& rng,
                                 bool* clamped) {
  if (!(d > 0.0))
    throw std::invalid_argument("elect_sources: d must be positive");
  double prob = d * std::log(static_cast<double>(n)) / static_cast<double>(n);
  if (clamped) *clamped = prob > 1.0;
  if (prob > 1.0) prob = 1.0;
  uint64_t label_space = n * n;  // labels drawn from [n^2]
  std::vector<Label> labels(n, 0);
  for (uint64_t v = 0; v < n; ++v) {
    if (rng.u01(purpose_tag(Purpose::elect), 0, v) < prob)
      labels[v] =
          1 + CounterRng::reduce(rng.bits64(purpose_tag(Purpose::elect_label),
                                            0, v),
                                 label_space);
  }
  return labels;
}

double estimate_degree(uint64_t degree_sum, uint64_t rounds, uint64_t n) {
  if (rounds == 0)
    throw std::invalid_argument("estimate_degree: need at least one round");
  if (n < 2) throw std::invalid_argument("estimate_degree: n must be >= 2");
  double denom =
      static_cast<double>(rounds) * (1.0 - 1.0 / static_cast<double>(n));
  return static_cast<double>(degree_sum) / denom;
}

}  // namespace dynlpa
