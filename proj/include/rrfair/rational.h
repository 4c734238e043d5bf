// Copyright 2026 The rrfair Authors.
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

#ifndef RRFAIR_RATIONAL_H_
#define RRFAIR_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace rrfair {

// Exact arbitrary-precision rational, always in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit by design of arithmetic.
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p" or "p/q" with optional leading '-'. Decimal notation and
  // zero denominators are rejected with ParseError.
  static Rational Parse(std::string_view text);

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }
  std::string Numerator() const { return value_.get_num().get_str(); }
  std::string Denominator() const { return value_.get_den().get_str(); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  // Throws InvalidArgument on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_{0};
};

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

// A rational that may be unbounded (+infinity). Used for fairness and
// equilibrium ratios whose denominator can vanish.
class Factor {
 public:
  static Factor Unbounded() { return Factor(); }
  static Factor Of(Rational value) { return Factor(std::move(value)); }

  bool unbounded() const { return !value_.has_value(); }
  // Precondition: !unbounded().
  const Rational& value() const { return *value_; }

  // True iff this factor is at least `alpha` (always true when unbounded).
  bool AtLeast(const Rational& alpha) const {
    return unbounded() || *value_ >= alpha;
  }

  std::string ToString() const {
    return unbounded() ? std::string("unbounded") : value_->ToString();
  }

  friend bool operator==(const Factor& a, const Factor& b) = default;
  // Unbounded compares greater than every bounded factor.
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b);

 private:
  Factor() = default;
  explicit Factor(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

}  // namespace rrfair

#endif  // RRFAIR_RATIONAL_H_
