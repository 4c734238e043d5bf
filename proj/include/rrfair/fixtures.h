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

// Named constructions with exact rational parameters. Each builder checks
// the strict inequalities its construction needs and throws InvalidArgument
// naming the first violated one.

#ifndef RRFAIR_FIXTURES_H_
#define RRFAIR_FIXTURES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rrfair/instance.h"
#include "rrfair/mechanism.h"
#include "rrfair/rational.h"

namespace rrfair {

// Two agents, four goods. Singletons are worth 2, every set of three or more
// is worth 4, and pairs are worth 3 or 4 with the two agents disagreeing on
// each pair. Both valuations are submodular.
Instance NoPneInstance();

struct BluffTightnessParams {
  Rational eps1{1, 100};
  Rational eps2{2, 100};
  Rational eps3{3, 100};
};
// Agent 1 additive (2, 1, 1-eps1, 1-eps2, 1-eps3); agent 2 OXS over three
// slots. Requires 1 > eps3 > eps2 > eps1 > 0.
Instance BluffTightnessInstance(const BluffTightnessParams& p = {});

struct AdditiveEf1TightnessParams {
  Rational delta{1, 1000};
  Rational beta{1, 2};
};
// Two additive agents over five goods. Requires 1/2 > delta > 0 and
// beta > 1/6 + delta.
Instance AdditiveEf1TightnessInstance(
    const AdditiveEf1TightnessParams& p = {});
// Agent 1 truthful, agent 2 reports g5 > g4 > g1 > g2 > g3.
Profile AdditiveEf1TightnessProfile(const Instance& inst);

struct OxsEf1TightnessParams {
  std::array<Rational, 6> eps{Rational(6, 6000), Rational(5, 6000),
                              Rational(4, 6000), Rational(3, 6000),
                              Rational(2, 6000), Rational(1, 6000)};
  Rational beta{3, 5};
};
// Three additive agents and one OXS agent over nine goods. Requires
// 1 > eps1 > ... > eps6 > 0 and beta > (1 + eps4)/2.
Instance OxsEf1TightnessInstance(const OxsEf1TightnessParams& p = {});
// Agents 1-3 truthful, agent 4 reports g3 > g6 > g8 > g1 > g2 > g4 > g5 >
// g7 > g9.
Profile OxsEf1TightnessProfile(const Instance& inst);

enum class FixtureId { kNoPne, kBluffTightness, kAdditiveEf1, kOxsEf1 };

// CLI names: prop3, thm4, thm9, prop10.
std::string_view FixtureName(FixtureId id);
std::optional<FixtureId> ParseFixtureName(std::string_view name);

}  // namespace rrfair

#endif  // RRFAIR_FIXTURES_H_
