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

// Seeded random instances. Weights are rationals k/d with d drawn from
// [1, max_denominator] and k from [0, max_weight * d]. Every generated
// valuation is certified for its class before it is returned.
//
//   additive, unit_demand: independent weights per good.
//   budget_additive: weights as above, cap = total weight * t/4 with t
//     drawn from {1, 2, 3}.
//   oxs: between 1 and m slots; each good gets one or two edges to random
//     slots.
//   submodular_table: weighted coverage over 2m elements, each good
//     covering every element with probability 1/2, optionally capped.

#ifndef RRFAIR_GENERATORS_H_
#define RRFAIR_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "rrfair/instance.h"

namespace rrfair {

enum class GeneratorClass {
  kAdditive,
  kBudgetAdditive,
  kUnitDemand,
  kOxs,
  kSubmodularTable,
};

std::string_view GeneratorClassName(GeneratorClass c);
std::optional<GeneratorClass> ParseGeneratorClass(std::string_view name);

// Largest m accepted per class: the certificate guard for cancelable
// classes and oxs, and a smaller bound for explicit tables.
int GeneratorGoodGuard(GeneratorClass c);

struct GeneratorSpec {
  GeneratorClass cls = GeneratorClass::kAdditive;
  int num_agents = 2;
  int num_goods = 4;
  int max_weight = 10;
  int max_denominator = 4;
  std::uint64_t seed = 0;
};

// Deterministic in the spec. Throws InvalidArgument on bad sizes,
// SizeGuardExceeded above GeneratorGoodGuard, and CertificationFailure if
// no certified valuation is found within a bounded number of attempts.
Instance Generate(const GeneratorSpec& spec);

// One valuation of the given class drawn from `rng`, not yet certified.
Valuation SampleValuation(GeneratorClass c, int num_goods, int max_weight,
                          int max_denominator, std::mt19937_64& rng);

// Whether `v` passes the certificate that defines class `c`.
bool CertifiedFor(GeneratorClass c, const Valuation& v);

}  // namespace rrfair

#endif  // RRFAIR_GENERATORS_H_
