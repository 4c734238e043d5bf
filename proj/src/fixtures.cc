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

#include "rrfair/fixtures.h"

#include <string>
#include <vector>

#include "rrfair/errors.h"
#include "rrfair/profiles.h"

namespace rrfair {

namespace {

void Require(bool ok, const std::string& inequality) {
  if (!ok) throw InvalidArgument("parameter constraint violated: " + inequality);
}

Valuation NoPneValuation(const std::vector<std::pair<Bundle, int>>& pairs) {
  std::vector<Rational> table(16);
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const int size = Bundle(mask).size();
    table[mask] = size == 1 ? Rational(2) : Rational(4);
  }
  for (const auto& [pair, value] : pairs) table[pair.mask()] = Rational(value);
  return Valuation::Table(4, std::move(table));
}

}  // namespace

Instance NoPneInstance() {
  Valuation v1 = NoPneValuation({{Bundle{0, 1}, 3},
                                 {Bundle{0, 2}, 3},
                                 {Bundle{0, 3}, 4},
                                 {Bundle{1, 2}, 4},
                                 {Bundle{1, 3}, 3},
                                 {Bundle{2, 3}, 3}});
  Valuation v2 = NoPneValuation({{Bundle{0, 1}, 4},
                                 {Bundle{0, 2}, 4},
                                 {Bundle{0, 3}, 3},
                                 {Bundle{1, 2}, 3},
                                 {Bundle{1, 3}, 4},
                                 {Bundle{2, 3}, 4}});
  return Instance({std::move(v1), std::move(v2)},
                  "prop3: two submodular agents without a (3/4+eps)-PNE");
}

Instance BluffTightnessInstance(const BluffTightnessParams& p) {
  Require(p.eps1 > Rational(0), "eps1 > 0");
  Require(p.eps2 > p.eps1, "eps2 > eps1");
  Require(p.eps3 > p.eps2, "eps3 > eps2");
  Require(Rational(1) > p.eps3, "1 > eps3");
  const Rational one(1);
  Valuation v1 = Valuation::Additive(
      {Rational(2), one, one - p.eps1, one - p.eps2, one - p.eps3});
  Valuation v2 = Valuation::Oxs(5, {"s1", "s2", "s3"},
                                {{0, 0, Rational(2)},
                                 {1, 1, one},
                                 {2, 2, one - p.eps1},
                                 {3, 1, one - p.eps2},
                                 {4, 1, one - p.eps3}});
  return Instance({std::move(v1), std::move(v2)},
                  "thm4: bluff profile tightness; agent 1 values g4 at "
                  "1-eps2 (corrected from a repeated g2 entry)");
}

Instance AdditiveEf1TightnessInstance(const AdditiveEf1TightnessParams& p) {
  const Rational half(1, 2);
  Require(p.delta > Rational(0), "delta > 0");
  Require(half > p.delta, "1/2 > delta");
  Require(p.beta > Rational(1, 6) + p.delta, "beta > 1/6 + delta");
  const Rational& d = p.delta;
  const Rational& b = p.beta;
  Valuation v1 = Valuation::Additive(
      {Rational(6), Rational(3) + d, Rational(3), half + d, half});
  Valuation v2 = Valuation::Additive(
      {Rational(6) * b, Rational(3) * b + d, Rational(3) * b, half + d, half});
  return Instance({std::move(v1), std::move(v2)},
                  "thm9: two additive agents, alpha-PNE that is only "
                  "(1+delta)/(6beta+delta)-EF1");
}

Profile AdditiveEf1TightnessProfile(const Instance& inst) {
  return {TruthfulRanking(inst.valuation(0)), Ranking({4, 3, 0, 1, 2})};
}

Instance OxsEf1TightnessInstance(const OxsEf1TightnessParams& p) {
  const auto& e = p.eps;
  Require(Rational(1) > e[0], "1 > eps1");
  for (int j = 0; j + 1 < 6; ++j) {
    Require(e[j] > e[j + 1], "eps" + std::to_string(j + 1) + " > eps" +
                                 std::to_string(j + 2));
  }
  Require(e[5] > Rational(0), "eps6 > 0");
  Require(p.beta > (Rational(1) + e[3]) / Rational(2),
          "beta > (1 + eps4)/2");
  const Rational one(1), two(2), five(5);
  const Rational& b = p.beta;
  Valuation v1 = Valuation::Additive(
      {five, e[4], e[5], one, two, e[0], e[1], e[2], e[3]});
  Valuation v2 = Valuation::Additive(
      {e[4], five, e[5], one, e[0], e[1], two, e[2], e[3]});
  Valuation v3 = Valuation::Additive(
      {e[4], e[5], five, e[0], e[1], two, e[2], e[3], one});
  Valuation v4 = Valuation::Oxs(
      9, {"s1", "s2", "s3", "s4", "s5", "s6", "s7"},
      {{0, 0, five * b},
       {1, 1, Rational(4) * b},
       {2, 2, Rational(3) * b},
       {3, 3, two * b},
       {4, 4, two * b - e[3]},
       {5, 3, one},
       {6, 4, one - e[2]},
       {7, 5, e[0]},
       {8, 6, e[1]}});
  return Instance(
      {std::move(v1), std::move(v2), std::move(v3), std::move(v4)},
      "prop10: three additive agents and one OXS agent, alpha-PNE that is "
      "not (alpha/2+eps)-EF1");
}

Profile OxsEf1TightnessProfile(const Instance& inst) {
  return {TruthfulRanking(inst.valuation(0)),
          TruthfulRanking(inst.valuation(1)),
          TruthfulRanking(inst.valuation(2)),
          Ranking({2, 5, 7, 0, 1, 3, 4, 6, 8})};
}

std::string_view FixtureName(FixtureId id) {
  switch (id) {
    case FixtureId::kNoPne:
      return "prop3";
    case FixtureId::kBluffTightness:
      return "thm4";
    case FixtureId::kAdditiveEf1:
      return "thm9";
    case FixtureId::kOxsEf1:
      return "prop10";
  }
  return "";
}

std::optional<FixtureId> ParseFixtureName(std::string_view name) {
  for (FixtureId id : {FixtureId::kNoPne, FixtureId::kBluffTightness,
                       FixtureId::kAdditiveEf1, FixtureId::kOxsEf1}) {
    if (FixtureName(id) == name) return id;
  }
  return std::nullopt;
}

}  // namespace rrfair
