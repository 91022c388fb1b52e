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

#include "dynlpa/snapshot.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynlpa {

Snapshot or_union(std::span<const Snapshot> snapshots) {
  if (snapshots.empty())
    throw std::invalid_argument("or_union: empty snapshot sequence");
  Snapshot out;
  out.t = snapshots.back().t;
  size_t total = 0;
  for (const Snapshot& s : snapshots) total += s.edges.size();
  out.edges.reserve(total);
  for (const Snapshot& s : snapshots)
    out.edges.insert(out.edges.end(), s.edges.begin(), s.edges.end());
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

}  // namespace dynlpa
