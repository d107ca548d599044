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

#include "msaa/dyadic.hpp"

#include <utility>

namespace msaa {

void DyadicRational::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && mpz_even_p(num_.get_mpz_t())) {
    num_ >>= 1;
    --exp_;
  }
}

DyadicRational DyadicRational::one_minus_pow2(unsigned r) {
  mpz_class num = 1;
  num <<= r;  // 2^r
  num -= 1;
  return DyadicRational(std::move(num), r);
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
  const unsigned e = std::max(exp_, o.exp_);
  num_ <<= (e - exp_);
  mpz_class other = o.num_;
  other <<= (e - o.exp_);
  num_ += other;
  exp_ = e;
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& o) {
  return *this += -o;
}

DyadicRational DyadicRational::scaled_pow2(int k) const {
  DyadicRational r = *this;
  if (r.num_ == 0) return r;
  if (k >= 0) {
    const unsigned up = static_cast<unsigned>(k);
    if (up >= r.exp_) {
      r.num_ <<= (up - r.exp_);
      r.exp_ = 0;
    } else {
      r.exp_ -= up;
    }
  } else {
    r.exp_ += static_cast<unsigned>(-k);
  }
  r.normalize();
  return r;
}

std::strong_ordering operator<=>(const DyadicRational& a,
                                 const DyadicRational& b) {
  // Compare a.num * 2^(e - a.exp) against b.num * 2^(e - b.exp) with
  // e = max(exponents); shifting keeps the comparison exact.
  const unsigned e = std::max(a.exp_, b.exp_);
  mpz_class lhs = a.num_;
  lhs <<= (e - a.exp_);
  mpz_class rhs = b.num_;
  rhs <<= (e - b.exp_);
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicRational::fraction_str() const {
  mpz_class den = 1;
  den <<= exp_;
  return num_.get_str() + "/" + den.get_str();
}

std::string DyadicRational::decimal_str() const {
  if (exp_ == 0) return num_.get_str();
  // num / 2^e == num * 5^e / 10^e, and 10^e has a finite decimal expansion by
  // construction. The numerator is odd here, so no trailing zeros appear.
  mpz_class five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, exp_);
  mpz_class mag = abs(num_) * five;
  std::string digits = mag.get_str();
  if (digits.size() <= exp_) {
    digits.insert(0, exp_ + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - exp_, ".");
  if (sgn(num_) < 0) digits.insert(0, "-");
  return digits;
}

}  // namespace msaa
