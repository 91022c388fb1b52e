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

#include "dynlpa/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dynlpa {

PlantedPartition::PlantedPartition(uint64_t n, uint32_t r) : n_(n), r_(r) {
  if (r < 2) throw std::invalid_argument("partition: r must be at least 2");
  if (n < 2ull * r)
    throw std::invalid_argument(
        "partition: need n >= 2r (communities would be singletons)");
  bounds_.resize(r + 1);
  // First (n mod r) communities get the extra node; sizes differ by <= 1.
  uint64_t quot = n / r, rem = n % r;
  bounds_[0] = 0;
  for (uint32_t i = 0; i < r; ++i)
    bounds_[i + 1] = bounds_[i] + quot + (i < rem ? 1 : 0);
}

uint32_t PlantedPartition::community_of(NodeId v) const {
  auto it = std::upper_bound(bounds_.begin(), bounds_.end(), uint64_t(v));
  return static_cast<uint32_t>(it - bounds_.begin()) - 1;
}

std::pair<uint64_t, uint64_t> tri_unindex(uint64_t idx, uint64_t m) {
  // Solve a*m - a(a+1)/2 <= idx in doubles, then fix up.
  double dm = static_cast<double>(m);
  double disc = (2.0 * dm - 1.0) * (2.0 * dm - 1.0) - 8.0 * static_cast<double>(idx);
  uint64_t a = static_cast<uint64_t>((2.0 * dm - 1.0 - std::sqrt(std::max(disc, 0.0))) / 2.0);
  while (a > 0 && tri_index(a, a + 1, m) > idx) --a;
  while (tri_index(a + 1, a + 2, m) <= idx && a + 2 < m) ++a;
  uint64_t b = idx - tri_index(a, a + 1, m) + a + 1;
  return {a, b};
}

PairSpace::PairSpace(PlantedPartition part) : part_(std::move(part)) {
  uint32_t r = part_.r();
  cross_id_.assign(size_t(r) * r, 0);
  uint64_t base = 0;
  for (uint32_t i = 0; i < r; ++i) {
    uint64_t m = part_.size(i);
    regions_.push_back({uint32_t(regions_.size()), true, i, i,
                        m * (m - 1) / 2, base});
    base += regions_.back().count;
  }
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = i + 1; j < r; ++j) {
      cross_id_[size_t(i) * r + j] = uint32_t(regions_.size());
      regions_.push_back({uint32_t(regions_.size()), false, i, j,
                          part_.size(i) * part_.size(j), base});
      base += regions_.back().count;
    }
  total_ = base;
}

std::pair<NodeId, NodeId> PairSpace::pair_at(const PairRegion& reg,
                                             uint64_t idx) const {
  if (reg.intra) {
    auto [a, b] = tri_unindex(idx, part_.size(reg.ca));
    uint64_t lo = part_.begin(reg.ca);
    return {NodeId(lo + a), NodeId(lo + b)};
  }
  uint64_t mb = part_.size(reg.cb);
  return {NodeId(part_.begin(reg.ca) + idx / mb),
          NodeId(part_.begin(reg.cb) + idx % mb)};
}

std::pair<uint32_t, uint64_t> PairSpace::index_of(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  uint32_t cu = part_.community_of(u), cv = part_.community_of(v);
  if (cu == cv) {
    uint64_t lo = part_.begin(cu);
    return {cu, tri_index(u - lo, v - lo, part_.size(cu))};
  }
  const PairRegion& reg = regions_[cross_id_[size_t(cu) * part_.r() + cv]];
  uint64_t mb = part_.size(cv);
  return {reg.id, (u - part_.begin(cu)) * mb + (v - part_.begin(cv))};
}

}  // namespace dynlpa
