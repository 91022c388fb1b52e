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

#include "dynlpa/prob_expr.hpp"

#include <cctype>
#include <cmath>

namespace dynlpa {

namespace {

class Parser {
 public:
  Parser(const std::string& text, uint64_t n) : text_(text), n_(double(n)) {}

  ProbValue parse() {
    skip_ws();
    ProbValue v;
    if (match_word("uniform")) {
      expect('(');
      v.lo = parse_simple();
      expect(',');
      v.hi = parse_simple();
      expect(')');
      v.uniform = true;
    } else {
      v.lo = v.hi = parse_simple();
    }
    skip_ws();
    if (pos_ != text_.size())
      throw ProbParseError("trailing characters in probability expression",
                           pos_);
    check_range(v.lo);
    check_range(v.hi);
    if (v.lo > v.hi)
      throw std::invalid_argument(
          "uniform bounds must satisfy lo <= hi: " + text_);
    return v;
  }

 private:
  // simple := "n^" exponent | [number] "log n / n" | number ["/" ("n"|number)]
  double parse_simple() {
    skip_ws();
    if (match_word("n^")) return std::pow(n_, parse_signed_rational());
    double coeff = 1.0;
    bool have_coeff = false;
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '.' || text_[pos_] == '-' || text_[pos_] == '+')) {
      coeff = parse_number();
      have_coeff = true;
    }
    skip_ws();
    if (match_word("log")) {
      expect_n();
      expect('/');
      expect_n();
      return coeff * std::log(n_) / n_;
    }
    if (!have_coeff)
      throw ProbParseError("expected a number, n^, or log n / n", pos_);
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'n') {
        expect_n();
        return coeff / n_;
      }
      double denom = parse_number();
      if (denom == 0.0) throw ProbParseError("division by zero", pos_);
      return coeff / denom;
    }
    return coeff;
  }

  // The bare variable "n" (must not run into another identifier).
  void expect_n() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'n')
      throw ProbParseError("expected 'n'", pos_);
    ++pos_;
    if (pos_ < text_.size() &&
        std::isalnum(static_cast<unsigned char>(text_[pos_])))
      throw ProbParseError("expected 'n'", pos_ - 1);
  }

  // exponent := signed decimal, optionally a rational a/b (e.g. -3/2)
  double parse_signed_rational() {
    double a = parse_number();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      double b = parse_number();
      if (b == 0.0) throw ProbParseError("division by zero in exponent", pos_);
      return a / b;
    }
    return a;
  }

  double parse_number() {
    skip_ws();
    size_t start = pos_;
    size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(text_.substr(start), &consumed);
    } catch (const std::exception&) {
      throw ProbParseError("expected a number", start);
    }
    pos_ = start + consumed;
    return value;
  }

  bool match_word(const std::string& word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ProbParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void check_range(double v) const {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("probability expression '" + text_ +
                                  "' evaluates to " + std::to_string(v) +
                                  ", outside [0,1], at n=" +
                                  std::to_string(uint64_t(n_)));
  }

  const std::string& text_;
  double n_;
  size_t pos_ = 0;
};

}  // namespace

ProbValue parse_prob_expr(const std::string& text, uint64_t n) {
  if (n < 2) throw std::invalid_argument("parse_prob_expr: n must be >= 2");
  return Parser(text, n).parse();
}

}  // namespace dynlpa
