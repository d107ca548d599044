// Copyright 2026 The msaa Authors
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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace msaa {

// Exact rational with a power-of-two denominator: value = numerator / 2^exponent.
//
// Kept in lowest terms: either exponent == 0 or the numerator is odd; zero is
// stored as 0 / 2^0. Every quantity this toolkit computes (expected clause
// counts, excesses) is dyadic, so addition, subtraction, negation and
// comparison stay closed and exact. No rounding happens anywhere.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long value) : num_(value) {}  // NOLINT(runtime/explicit)
  DyadicRational(mpz_class value) : num_(std::move(value)) {}  // NOLINT
  DyadicRational(mpz_class numerator, unsigned exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    normalize();
  }

  // 1 - 2^{-r}, the probability a width-r clause survives a uniform assignment.
  static DyadicRational one_minus_pow2(unsigned r);

  const mpz_class& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& o);
  DyadicRational& operator-=(const DyadicRational& o);
  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) {
    a += b;
    return a;
  }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) {
    a -= b;
    return a;
  }

  // Multiplies by 2^k (k may be negative).
  DyadicRational scaled_pow2(int k) const;

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a,
                                          const DyadicRational& b);

  // "7/8", "3/1", "-5/4": numerator over the expanded power of two.
  std::string fraction_str() const;
  // Exact finite decimal: "0.875", "3", "-0.5". Dyadic fractions always
  // terminate, so this never truncates.
  std::string decimal_str() const;

 private:
  void normalize();

  mpz_class num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace msaa
