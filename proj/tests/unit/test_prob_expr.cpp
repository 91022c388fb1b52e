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

#include <cmath>

#include "dynlpa/prob_expr.hpp"

using namespace dynlpa;

TEST_CASE("fixed expressions") {
  CHECK(parse_prob_expr("5/n", 20000).fixed() == doctest::Approx(0.00025));
  CHECK(parse_prob_expr("n^-1.5", 10000).fixed() == doctest::Approx(1e-6));
  CHECK(parse_prob_expr("n^-2", 100).fixed() == doctest::Approx(1e-4));
  CHECK(parse_prob_expr("n^-5/3", 1000).fixed() ==
        doctest::Approx(std::pow(1000.0, -5.0 / 3.0)));
  CHECK(parse_prob_expr("0.25", 50).fixed() == doctest::Approx(0.25));
  CHECK(parse_prob_expr("log n / n", 1000).fixed() ==
        doctest::Approx(std::log(1000.0) / 1000.0));
  CHECK(parse_prob_expr("0.5 log n / n", 1000).fixed() ==
        doctest::Approx(0.5 * std::log(1000.0) / 1000.0));
  CHECK(parse_prob_expr(" 1/4 ", 50).fixed() == doctest::Approx(0.25));
  CHECK(parse_prob_expr("0", 50).fixed() == 0.0);
}

TEST_CASE("uniform expressions mark the per-pair regime") {
  ProbValue v = parse_prob_expr("uniform(1/n,9/n)", 20000);
  CHECK(v.uniform);
  CHECK(v.lo == doctest::Approx(1.0 / 20000));
  CHECK(v.hi == doctest::Approx(9.0 / 20000));
  ProbValue w = parse_prob_expr("uniform(0, log n / n)", 20000);
  CHECK(w.uniform);
  CHECK(w.lo == 0.0);
  CHECK(w.hi == doctest::Approx(std::log(20000.0) / 20000.0));
  CHECK(!parse_prob_expr("5/n", 20000).uniform);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_prob_expr("5/x", 100);
    FAIL("expected ProbParseError");
  } catch (const ProbParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    parse_prob_expr("uniform(1/n 9/n)", 100);
    FAIL("expected ProbParseError");
  } catch (const ProbParseError& e) {
    CHECK(e.position() >= 11);
  }
  CHECK_THROWS_AS(parse_prob_expr("", 100), ProbParseError);
  CHECK_THROWS_AS(parse_prob_expr("5/n extra", 100), ProbParseError);
}

TEST_CASE("out-of-range values are rejected") {
  CHECK_THROWS_AS(parse_prob_expr("2.0", 100), std::invalid_argument);
  CHECK_THROWS_AS(parse_prob_expr("-0.1", 100), std::invalid_argument);
  CHECK_THROWS_AS(parse_prob_expr("5/n", 2), std::invalid_argument);  // 2.5
  CHECK_THROWS_AS(parse_prob_expr("uniform(9/n,1/n)", 100),
                  std::invalid_argument);  // lo > hi
}
