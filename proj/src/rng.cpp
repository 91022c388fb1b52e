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

#include "dynlpa/rng.hpp"

namespace dynlpa {

namespace {

constexpr uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr uint64_t kPhiloxW0 = 0x9E3779B97F4A7C15ull;
constexpr uint64_t kPhiloxW1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
  unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<uint64_t>(product >> 64);
  lo = static_cast<uint64_t>(product);
}

inline void philox_round(PhiloxBlock& x, const PhiloxKey& key) {
  uint64_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, x[0], hi0, lo0);
  mulhilo(kPhiloxM1, x[2], hi1, lo1);
  x = {hi1 ^ x[1] ^ key.k0, lo1, hi0 ^ x[3] ^ key.k1, lo0};
}

}  // namespace

PhiloxBlock philox4x64(PhiloxKey key, uint64_t c0, uint64_t c1, uint64_t c2,
                       uint64_t c3) {
  PhiloxBlock x{c0, c1, c2, c3};
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key.k0 += kPhiloxW0;
      key.k1 += kPhiloxW1;
    }
    philox_round(x, key);
  }
  return x;
}

uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

uint64_t derive_trial_seed(uint64_t master_seed, uint64_t trial) {
  return mix64(master_seed ^ mix64(trial + 1));
}

}  // namespace dynlpa
