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

#include "dynlpa/edge_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dynlpa {

namespace {

void check_prob(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

}  // namespace

EdgeModel EdgeModel::two_block(double p, double q) {
  EdgeModel m;
  m.kind = EdgeModelKind::two_block;
  m.p = p;
  m.q = q;
  m.validate();
  return m;
}

EdgeModel EdgeModel::non_homogeneous(double lo_p, double hi_p, double q) {
  EdgeModel m;
  m.kind = EdgeModelKind::non_homogeneous;
  m.lo_p = lo_p;
  m.hi_p = hi_p;
  m.q = q;
  m.validate();
  return m;
}

EdgeModel EdgeModel::markovian(double p_up, double p_down, double q_up,
                               double q_down, MarkovInit init) {
  EdgeModel m;
  m.kind = EdgeModelKind::markovian;
  m.p_up = p_up;
  m.p_down = p_down;
  m.q_up = q_up;
  m.q_down = q_down;
  m.init = init;
  m.validate();
  return m;
}

void EdgeModel::validate() const {
  switch (kind) {
    case EdgeModelKind::two_block:
      check_prob(p, "p");
      check_prob(q, "q");
      if (q > p) throw std::invalid_argument("two_block requires q <= p");
      break;
    case EdgeModelKind::non_homogeneous:
      check_prob(lo_p, "lo_p");
      check_prob(hi_p, "hi_p");
      check_prob(q, "q");
      if (lo_p > hi_p)
        throw std::invalid_argument("non_homogeneous requires lo_p <= hi_p");
      break;
    case EdgeModelKind::markovian:
      check_prob(p_up, "p_up");
      check_prob(p_down, "p_down");
      check_prob(q_up, "q_up");
      check_prob(q_down, "q_down");
      if (init == MarkovInit::stationary) {
        if (p_up + p_down <= 0.0 || q_up + q_down <= 0.0)
          throw std::invalid_argument(
              "stationary initial set needs up+down > 0 for both chains");
      }
      break;
  }
}

double EdgeModel::mean_intra_prob() const {
  switch (kind) {
    case EdgeModelKind::two_block:
      return p;
    case EdgeModelKind::non_homogeneous:
      return 0.5 * (lo_p + hi_p);
    case EdgeModelKind::markovian:
      return stationary_edge_prob(p_up, p_down);
  }
  return 0.0;
}

double EdgeModel::mean_cross_prob() const {
  if (kind == EdgeModelKind::markovian)
    return stationary_edge_prob(q_up, q_down);
  return q;
}

double stationary_edge_prob(double up, double down) {
  check_prob(up, "up");
  check_prob(down, "down");
  if (up + down <= 0.0)
    throw std::invalid_argument("stationary_edge_prob: up + down must be > 0");
  return up / (up + down);
}

uint64_t mixing_time_bound(const EdgeModel& model, uint64_t n,
                           double multiplier) {
  if (model.kind != EdgeModelKind::markovian)
    throw std::invalid_argument("mixing_time_bound needs a markovian model");
  if (!(multiplier > 0.0))
    throw std::invalid_argument("mixing_time_bound: multiplier must be > 0");
  double m_in = 1.0 / (model.p_up + model.p_down);
  double m_out = 1.0 / (model.q_up + model.q_down);
  double m = std::max({m_in, m_out, std::log(static_cast<double>(n))});
  return static_cast<uint64_t>(std::ceil(multiplier * m));
}

}  // namespace dynlpa
