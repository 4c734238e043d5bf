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

#include "rrfair/generators.h"

#include <algorithm>
#include <string>
#include <vector>

#include "rrfair/certificates.h"
#include "rrfair/errors.h"

namespace rrfair {

namespace {

constexpr int kMaxAttempts = 16;
constexpr int kTableGoodGuard = 12;

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational SampleWeight(std::mt19937_64& rng, int max_weight,
                      int max_denominator) {
  const int d = UniformInt(rng, 1, max_denominator);
  const int k = UniformInt(rng, 0, max_weight * d);
  return Rational(k, d);
}

std::vector<Rational> SampleWeights(std::mt19937_64& rng, int m,
                                    int max_weight, int max_denominator) {
  std::vector<Rational> w;
  for (int g = 0; g < m; ++g) {
    w.push_back(SampleWeight(rng, max_weight, max_denominator));
  }
  return w;
}

Valuation SampleOxs(std::mt19937_64& rng, int m, int max_weight,
                    int max_denominator) {
  const int slots = UniformInt(rng, 1, m);
  std::vector<std::string> labels;
  for (int s = 0; s < slots; ++s) labels.push_back("s" + std::to_string(s + 1));
  std::vector<WeightedEdge> edges;
  for (GoodId g = 0; g < m; ++g) {
    const int degree = UniformInt(rng, 1, std::min(2, slots));
    const int first = UniformInt(rng, 0, slots - 1);
    for (int e = 0; e < degree; ++e) {
      // The second edge goes to a different slot.
      const int slot =
          e == 0 ? first : (first + UniformInt(rng, 1, slots - 1)) % slots;
      edges.push_back(
          {g, slot, SampleWeight(rng, max_weight, max_denominator)});
    }
  }
  return Valuation::Oxs(m, std::move(labels), std::move(edges));
}

Valuation SampleCoverage(std::mt19937_64& rng, int m, int max_weight,
                         int max_denominator) {
  const int universe = 2 * m;
  std::vector<Rational> element_weight =
      SampleWeights(rng, universe, max_weight, max_denominator);
  std::vector<std::uint64_t> covers(m);
  for (GoodId g = 0; g < m; ++g) {
    for (int e = 0; e < universe; ++e) {
      if (UniformInt(rng, 0, 1) == 1) covers[g] |= std::uint64_t{1} << e;
    }
  }
  Rational total;
  for (const Rational& w : element_weight) total += w;
  std::optional<Rational> cap;
  if (UniformInt(rng, 0, 1) == 1) {
    cap = total * Rational(UniformInt(rng, 1, 3), 4);
  }
  std::vector<Rational> table(std::size_t{1} << m);
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    std::uint64_t covered = 0;
    Bundle(mask).ForEach([&](GoodId g) { covered |= covers[g]; });
    Rational value;
    for (int e = 0; e < universe; ++e) {
      if ((covered >> e) & 1) value += element_weight[e];
    }
    table[mask] = cap ? Min(*cap, value) : value;
  }
  return Valuation::Table(m, std::move(table));
}

}  // namespace

std::string_view GeneratorClassName(GeneratorClass c) {
  switch (c) {
    case GeneratorClass::kAdditive:
      return "additive";
    case GeneratorClass::kBudgetAdditive:
      return "budget_additive";
    case GeneratorClass::kUnitDemand:
      return "unit_demand";
    case GeneratorClass::kOxs:
      return "oxs";
    case GeneratorClass::kSubmodularTable:
      return "submodular_table";
  }
  return "";
}

std::optional<GeneratorClass> ParseGeneratorClass(std::string_view name) {
  for (GeneratorClass c :
       {GeneratorClass::kAdditive, GeneratorClass::kBudgetAdditive,
        GeneratorClass::kUnitDemand, GeneratorClass::kOxs,
        GeneratorClass::kSubmodularTable}) {
    if (GeneratorClassName(c) == name) return c;
  }
  return std::nullopt;
}

int GeneratorGoodGuard(GeneratorClass c) {
  switch (c) {
    case GeneratorClass::kAdditive:
    case GeneratorClass::kBudgetAdditive:
    case GeneratorClass::kUnitDemand:
      return kCancelableGuard;
    case GeneratorClass::kOxs:
      return kSubmodularGuard;
    case GeneratorClass::kSubmodularTable:
      return kTableGoodGuard;
  }
  return 0;
}

Valuation SampleValuation(GeneratorClass c, int num_goods, int max_weight,
                          int max_denominator, std::mt19937_64& rng) {
  switch (c) {
    case GeneratorClass::kAdditive:
      return Valuation::Additive(
          SampleWeights(rng, num_goods, max_weight, max_denominator));
    case GeneratorClass::kBudgetAdditive: {
      std::vector<Rational> w =
          SampleWeights(rng, num_goods, max_weight, max_denominator);
      Rational total;
      for (const Rational& x : w) total += x;
      Rational cap = total * Rational(UniformInt(rng, 1, 3), 4);
      return Valuation::BudgetAdditive(std::move(w), std::move(cap));
    }
    case GeneratorClass::kUnitDemand:
      return Valuation::UnitDemand(
          SampleWeights(rng, num_goods, max_weight, max_denominator));
    case GeneratorClass::kOxs:
      return SampleOxs(rng, num_goods, max_weight, max_denominator);
    case GeneratorClass::kSubmodularTable:
      return SampleCoverage(rng, num_goods, max_weight, max_denominator);
  }
  throw InvalidArgument("unknown generator class");
}

bool CertifiedFor(GeneratorClass c, const Valuation& v) {
  switch (c) {
    case GeneratorClass::kAdditive:
    case GeneratorClass::kBudgetAdditive:
    case GeneratorClass::kUnitDemand:
      return CheckCancelable(v).holds && CheckSubadditive(v).holds;
    case GeneratorClass::kOxs:
    case GeneratorClass::kSubmodularTable:
      return CheckMonotone(v).holds && CheckSubmodular(v).holds;
  }
  return false;
}

Instance Generate(const GeneratorSpec& spec) {
  if (spec.num_agents < 1 || spec.num_goods < 1) {
    throw InvalidArgument("generator needs n >= 1 and m >= 1");
  }
  if (spec.max_weight < 1 || spec.max_denominator < 1) {
    throw InvalidArgument("generator needs max_weight >= 1 and "
                          "max_denominator >= 1");
  }
  const int guard = GeneratorGoodGuard(spec.cls);
  if (spec.num_goods > guard) {
    throw SizeGuardExceeded(std::string(GeneratorClassName(spec.cls)) +
                            " generator needs m <= " + std::to_string(guard) +
                            ", got m = " + std::to_string(spec.num_goods));
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Valuation> valuations;
  for (int i = 0; i < spec.num_agents; ++i) {
    std::optional<Valuation> accepted;
    for (int attempt = 0; attempt < kMaxAttempts && !accepted; ++attempt) {
      Valuation v = SampleValuation(spec.cls, spec.num_goods, spec.max_weight,
                                    spec.max_denominator, rng);
      if (CertifiedFor(spec.cls, v)) accepted = std::move(v);
    }
    if (!accepted) {
      throw CertificationFailure(
          "no certified " + std::string(GeneratorClassName(spec.cls)) +
          " valuation after " + std::to_string(kMaxAttempts) + " attempts");
    }
    valuations.push_back(std::move(*accepted));
  }
  return Instance(std::move(valuations),
                  "generated " + std::string(GeneratorClassName(spec.cls)) +
                      " n=" + std::to_string(spec.num_agents) +
                      " m=" + std::to_string(spec.num_goods) +
                      " seed=" + std::to_string(spec.seed));
}

}  // namespace rrfair
