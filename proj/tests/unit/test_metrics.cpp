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

#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "dynlpa/metrics.hpp"
#include "dynlpa/rng.hpp"

using namespace dynlpa;

TEST_CASE("label_counts on hand-built assignments") {
  PlantedPartition part(6, 2);  // {0,1,2} and {3,4,5}
  std::vector<Label> refs{1, 2};
  {
    std::vector<Label> labels(6, 0);
    LabelCounts lc = label_counts(labels, part, refs);
    CHECK(lc.k == std::vector<uint64_t>{0, 0});
    CHECK(lc.h == std::vector<uint64_t>{0, 0});
  }
  {
    std::vector<Label> labels{1, 1, 1, 2, 2, 2};
    LabelCounts lc = label_counts(labels, part, refs);
    CHECK(lc.k == std::vector<uint64_t>{3, 3});
    CHECK(lc.h == std::vector<uint64_t>{0, 0});
  }
  {
    // Mixed by hand: community 0 = {1, 2, none}, community 1 = {2, 1, 7}.
    std::vector<Label> labels{1, 2, 0, 2, 1, 7};
    LabelCounts lc = label_counts(labels, part, refs);
    CHECK(lc.k == std::vector<uint64_t>{1, 1});
    CHECK(lc.h == std::vector<uint64_t>{1, 1});
  }
  CHECK_THROWS_AS(label_counts(std::vector<Label>(6, 1), part,
                               std::vector<Label>{3, 3}),
                  std::invalid_argument);
}

TEST_CASE("is_good_labeling") {
  PlantedPartition part(6, 2);
  CHECK(is_good_labeling(std::vector<Label>{1, 1, 1, 2, 2, 2}, part));
  CHECK(!is_good_labeling(std::vector<Label>{1, 1, 2, 2, 2, 2}, part));
  CHECK(!is_good_labeling(std::vector<Label>{7, 7, 7, 7, 7, 7}, part));
  CHECK(!is_good_labeling(std::vector<Label>{1, 1, 0, 2, 2, 2}, part));
  // r=3: two communities sharing a label is not good.
  PlantedPartition p3(9, 3);
  CHECK(is_good_labeling(std::vector<Label>{4, 4, 4, 9, 9, 9, 2, 2, 2}, p3));
  CHECK(!is_good_labeling(std::vector<Label>{4, 4, 4, 9, 9, 9, 4, 4, 4}, p3));
}

TEST_CASE("good labeling iff counts are full (cross-check of the two paths)") {
  PlantedPartition part(8, 2);
  std::vector<Label> refs{1, 2};
  CounterRng rng(13);
  for (int it = 0; it < 200; ++it) {
    std::vector<Label> labels(8);
    for (int v = 0; v < 8; ++v)
      labels[v] = CounterRng::reduce(
          rng.bits64(purpose_tag(Purpose::naive_pair), uint32_t(it), v), 4);
    LabelCounts lc = label_counts(labels, part, refs);
    uint64_t total = 0;
    for (size_t i = 0; i < 2; ++i) total += lc.k[i] + lc.h[i];
    CHECK(total <= 8);  // the rest are unlabeled or off-reference
    bool full = lc.k[0] == part.size(0) && lc.k[1] == part.size(1) &&
                lc.h[0] == 0 && lc.h[1] == 0;
    if (full) CHECK(is_good_labeling(labels, part));
    if (is_good_labeling(labels, part) && labels[0] == 1 && labels[4] == 2)
      CHECK(full);
  }
}

TEST_CASE("convergence_round follows the last change") {
  auto row = [](uint64_t round, bool good, bool changed) {
    TrajectoryRow r;
    r.graph_round = round;
    r.rule_step = round;
    r.good = good;
    r.changed = changed;
    return r;
  };
  {
    // Good from round 30 onward, tau5 = 36 -> 30.
    Trajectory t;
    for (uint64_t g = 28; g <= 36; ++g)
      t.push_back(row(g, g >= 30, g == 29 || g == 30));
    // The change at rule step 30 produced the good labeling.
    CHECK(convergence_round(t) == 30);
  }
  {
    // Good at 30, broken at 33, good again from 34 -> 34.
    Trajectory t;
    for (uint64_t g = 28; g <= 36; ++g) {
      bool good = (g >= 30 && g < 33) || g >= 34;
      bool changed = g == 30 || g == 33 || g == 34;
      t.push_back(row(g, good, changed));
    }
    CHECK(convergence_round(t) == 34);
  }
  {
    // Never good -> none.
    Trajectory t;
    for (uint64_t g = 1; g <= 5; ++g) t.push_back(row(g, false, g == 2));
    CHECK(!convergence_round(t).has_value());
  }
}

TEST_CASE("trajectory csv export") {
  Trajectory t;
  TrajectoryRow r;
  r.graph_round = 3;
  r.rule_step = 3;
  r.k = {5, 4};
  r.h = {0, 1};
  t.push_back(r);
  std::ostringstream os;
  write_trajectory_csv(os, t);
  CHECK(os.str() == "round,k1,k2,h1,h2\n3,5,4,0,1\n");
}
