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

#include "rrfair/rational.h"

#include <cctype>
#include <string>

#include "rrfair/errors.h"

namespace rrfair {

namespace {

bool IsInteger(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool IsUnsigned(std::string_view s) {
  return !s.empty() && s.front() != '-' && IsInteger(s);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsInteger(num) || !IsUnsigned(den)) {
    throw ParseError("malformed rational \"" + std::string(text) +
                     "\": expected p or p/q with integer p, q");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("malformed rational \"" + std::string(text) +
                     "\": zero denominator");
  }
  Rational r;
  r.value_ = mpq_class(mpz_class(std::string(num), 10), d);
  r.value_.canonicalize();
  return r;
}

std::string Rational::ToString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.IsZero()) throw InvalidArgument("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
  if (a.unbounded() || b.unbounded()) {
    return a.unbounded() <=> b.unbounded();
  }
  return a.value() <=> b.value();
}

}  // namespace rrfair
