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
#include <stdexcept>
#include <string>

namespace dynlpa {

// Probability expressions evaluated at a given n:
//
//   number            0.00025
//   number / n        5/n
//   n^ exponent       n^-2, n^-3/2, n^-1.5
//   [number] log n / n      log n / n, 0.5 log n / n   (natural log)
//   uniform(e1, e2)   per-pair regime, e1/e2 as above
//
// uniform(...) marks the non-homogeneous model; elsewhere the value is a
// single probability.

struct ProbValue {
  bool uniform = false;
  double lo = 0.0;  // == hi for fixed values
  double hi = 0.0;

  double fixed() const { return lo; }
};

class ProbParseError : public std::invalid_argument {
 public:
  ProbParseError(const std::string& what, size_t position)
      : std::invalid_argument(what + " (at position " +
                              std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Throws ProbParseError on syntax errors and std::invalid_argument when
// the result leaves [0,1] at this n.
ProbValue parse_prob_expr(const std::string& text, uint64_t n);

}  // namespace dynlpa
