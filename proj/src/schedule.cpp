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

#include "dynlpa/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dynlpa {

namespace {

uint64_t ceil_len(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("phase length must be positive");
  return static_cast<uint64_t>(std::ceil(x));
}

[[noreturn]] void bad_constant(const std::string& name, const std::string& why) {
  throw std::invalid_argument("theoretical_schedule: constant " + name + ": " +
                              why);
}

}  // namespace

Phase PhaseSchedule::phase_of(uint64_t s) const {
  if (s <= tau1) return Phase::source_labeling;
  if (s <= tau3) return Phase::fast_labeling;
  if (s <= tau4) return Phase::saturation;
  return Phase::majority;
}

void PhaseSchedule::validate() const {
  if (!(tau1 < tau2 && tau2 < tau3 && tau3 < tau4 && tau4 < tau5))
    throw std::invalid_argument("schedule: taus must be strictly increasing");
  if (window_len == 0 || window_count == 0 ||
      tau4 - tau3 != window_len * window_count)
    throw std::invalid_argument(
        "schedule: saturation phase must equal window_len * window_count");
  if (delta == 0) throw std::invalid_argument("schedule: delta must be >= 1");
  if (delta > 1 && quiescent_gap > 0)
    throw std::invalid_argument(
        "schedule: stride and quiescent gaps cannot be combined");
}

PhaseSchedule operational_schedule(uint64_t n, double c,
                                   uint32_t window_count) {
  return operational_schedule_per_phase(n, {c, c, c, c, c}, window_count);
}

PhaseSchedule operational_schedule_per_phase(uint64_t n,
                                             const std::array<double, 5>& c,
                                             uint32_t window_count) {
  if (n < 2) throw std::invalid_argument("schedule: n must be >= 2");
  if (window_count == 0)
    throw std::invalid_argument("schedule: window_count must be >= 1");
  // Phase length c * log2(n), the scaling the published per-c round
  // totals follow. The saturation phase is split into window_count
  // windows of floor(length / window_count) rounds (at least 1).
  double log2_n = std::log2(static_cast<double>(n));
  auto len = [&](double ci) {
    if (!(ci > 0.0))
      throw std::invalid_argument("phase length must be positive");
    return std::max<uint64_t>(
        1, static_cast<uint64_t>(std::llround(ci * log2_n)));
  };
  PhaseSchedule s;
  s.window_count = window_count;
  s.window_len = std::max<uint64_t>(1, len(c[3]) / window_count);
  s.tau1 = len(c[0]);
  s.tau2 = s.tau1 + len(c[1]);
  s.tau3 = s.tau2 + len(c[2]);
  s.tau4 = s.tau3 + s.window_len * window_count;
  s.tau5 = s.tau4 + len(c[4]);
  s.validate();
  return s;
}

PhaseSchedule theoretical_schedule(uint64_t n, double p,
                                   const TheoreticalConstants& k) {
  if (n < 3) throw std::invalid_argument("theoretical_schedule: n too small");
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("theoretical_schedule: p must lie in (0,1]");
  if (!(k.c1 > 0)) bad_constant("c1", "must be positive");
  if (!(k.d1 > 0)) bad_constant("d1", "must be positive");
  if (!(k.a > 0 && k.a < 1)) bad_constant("a", "must lie in (0,1)");
  if (!(k.phi > 0 && k.phi < 1)) bad_constant("phi", "must lie in (0,1)");
  if (!(k.gamma > 0)) bad_constant("gamma", "must be positive");
  if (!(k.c4 > 0)) bad_constant("c4", "must be positive");
  if (!(k.c5 > 0)) bad_constant("c5", "must be positive");

  double ln_n = std::log(static_cast<double>(n));
  double log3 = ln_n * ln_n * ln_n;
  double np = static_cast<double>(n) * p;
  double growth = std::log1p(np / 2.0);

  double k_low = (k.d1 / 16.0) * p * static_cast<double>(n) * ln_n;
  if (!(k_low > 0)) bad_constant("d1", "underline-k evaluates to 0");
  double f = 2.0 * std::max(std::sqrt(ln_n / k_low),
                            log3 / std::pow(static_cast<double>(n), 1.0 - k.a));
  if (!(f < 1.0))
    bad_constant("d1", "F(n, underline-k) >= 1; increase d1 or a");
  double shifted_growth = std::log((1.0 + np / 2.0) * (1.0 - f));
  if (!(shifted_growth > 0.0))
    bad_constant("d1", "(1+np/2)(1-F) <= 1; increase d1");

  double arg1 = std::pow(static_cast<double>(n), k.a) / (k.phi * log3);
  if (!(arg1 > 0.0)) bad_constant("phi", "log argument not positive");
  double arg2 = log3 / k_low;
  if (!(arg2 > 0.0)) bad_constant("d1", "log argument not positive");
  double arg3 =
      std::pow(static_cast<double>(n), 1.0 - k.a) / (k.gamma * log3);
  if (!(arg3 > 0.0)) bad_constant("gamma", "log argument not positive");

  PhaseSchedule s;
  s.window_count = 3;
  s.tau1 = static_cast<uint64_t>(std::ceil(k.c1 * ln_n));
  double len2 = std::log(arg1) / growth + std::log(arg2) / shifted_growth;
  s.tau2 = s.tau1 + std::max<uint64_t>(
                        1, static_cast<uint64_t>(std::ceil(len2)));
  double len3 = std::log(arg3) / growth;
  s.tau3 = s.tau2 + std::max<uint64_t>(
                        1, static_cast<uint64_t>(std::ceil(len3)));
  s.window_len = ceil_len(k.c4 * ln_n);
  s.tau4 = s.tau3 + 3 * s.window_len;
  s.tau5 = s.tau4 + ceil_len(k.c5 * ln_n);
  s.validate();
  return s;
}

PhaseSchedule sparse_schedule(PhaseSchedule base, double p, uint64_t n) {
  if (!(p > 0.0)) throw std::invalid_argument("sparse_schedule: p must be > 0");
  double pn = p * static_cast<double>(n);
  if (pn >= 1.0) return base;
  base.delta = static_cast<uint64_t>(std::ceil(1.0 / pn));
  base.validate();
  return base;
}

PhaseSchedule meg_schedule(PhaseSchedule base, const EdgeModel& model,
                           uint64_t n, double multiplier) {
  if (model.kind != EdgeModelKind::markovian)
    throw std::invalid_argument("meg_schedule needs a markovian model");
  if (multiplier < 0.0)
    throw std::invalid_argument("meg_schedule: multiplier must be >= 0");
  if (multiplier == 0.0) return base;
  base.quiescent_gap = mixing_time_bound(model, n, multiplier);
  base.validate();
  return base;
}

}  // namespace dynlpa
