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
#include <array>

namespace dynlpa {

// Counter-based randomness. Every draw in a trial is addressed by
// (purpose, round, index) under the trial's key, so any component can
// re-derive any draw without sequential state. Parallel trials and the
// test oracles therefore see identical streams regardless of execution
// order.
//
// The block function is Philox4x64-10 (Salmon et al., SC'11), the same
// variant NumPy ships, which the unit tests use to cross-check outputs.

struct PhiloxKey {
  uint64_t k0 = 0;
  uint64_t k1 = 0;
};

using PhiloxBlock = std::array<uint64_t, 4>;

// One 256-bit block for counter (c0,c1,c2,c3) under `key`.
PhiloxBlock philox4x64(PhiloxKey key, uint64_t c0, uint64_t c1, uint64_t c2,
                       uint64_t c3);

// splitmix64 finalizer; used for seed derivation only.
uint64_t mix64(uint64_t x);

// Seed for trial `trial` under `master_seed`. Distinct trials give
// statistically independent Philox keys.
uint64_t derive_trial_seed(uint64_t master_seed, uint64_t trial);

// Draw purposes. The region id of the draw (which intra/cross block of
// the pair space it belongs to) is packed into the low 24 bits.
enum class Purpose : uint32_t {
  snapshot_walk = 0,  // geometric-gap walk over a region's pair indices
  thinning = 1,       // acceptance draw for non-homogeneous candidates
  pair_prob = 2,      // per-pair intra probability (round fixed to 0)
  markov_init = 3,    // stationary initial edge set
  markov_death = 4,   // per-alive-edge survival
  markov_birth = 5,   // geometric-gap walk for births
  linkproc = 6,       // per directed edge: (M, C) pair
  elect = 7,          // per-node source election
  elect_label = 8,    // per-node source label
  naive_pair = 9,     // oracle-only independent per-pair stream
};

constexpr uint32_t purpose_tag(Purpose p, uint32_t region = 0) {
  return (static_cast<uint32_t>(p) << 24) | (region & 0xFFFFFFu);
}

// Addressed draws under one trial key.
class CounterRng {
 public:
  CounterRng() = default;
  explicit CounterRng(uint64_t trial_seed)
      : key_{trial_seed, mix64(trial_seed ^ 0xA5A5A5A5A5A5A5A5ull)} {}

  PhiloxBlock block(uint32_t purpose, uint32_t round, uint64_t index) const {
    return philox4x64(key_, index, (uint64_t(purpose) << 32) | round, 0, 0);
  }

  uint64_t bits64(uint32_t purpose, uint32_t round, uint64_t index) const {
    return block(purpose, round, index)[0];
  }

  // Uniform in [0,1) with 53 random bits.
  double u01(uint32_t purpose, uint32_t round, uint64_t index) const {
    return to_u01(bits64(purpose, round, index));
  }

  static double to_u01(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound) by 128-bit multiply-shift; bound > 0.
  static uint64_t reduce(uint64_t bits, uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(bits) * bound) >> 64);
  }

  PhiloxKey key() const { return key_; }

 private:
  PhiloxKey key_;
};

}  // namespace dynlpa
