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

// Brute-force reference implementations used only by tests. None of these
// share code paths with the library beyond Valuation::Value and the
// Round-Robin simulator.

#ifndef RRFAIR_TESTS_ORACLES_H_
#define RRFAIR_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rrfair/generators.h"
#include "rrfair/instance.h"
#include "rrfair/matching.h"
#include "rrfair/mechanism.h"
#include "rrfair/rational.h"

namespace rrfair::testing {

inline Rational Q(const std::string& text) { return Rational::Parse(text); }

// Maximum total weight over all ways to give each good in `goods` at most
// one edge with pairwise distinct slots.
inline Rational BruteMatching(const std::vector<WeightedEdge>& edges,
                              Bundle goods) {
  Rational best;
  std::vector<bool> slot_used;
  for (const WeightedEdge& e : edges) {
    if (e.slot >= static_cast<int>(slot_used.size())) {
      slot_used.resize(e.slot + 1, false);
    }
  }
  std::vector<bool> good_used(kMaxGoods, false);
  // Choose a subset of edges forming a matching; depth-first over edges.
  auto rec = [&](auto&& self, std::size_t k, Rational acc) -> void {
    if (k == edges.size()) {
      if (acc > best) best = acc;
      return;
    }
    self(self, k + 1, acc);
    const WeightedEdge& e = edges[k];
    if (goods.Contains(e.good) && !good_used[e.good] && !slot_used[e.slot]) {
      good_used[e.good] = true;
      slot_used[e.slot] = true;
      self(self, k + 1, acc + e.weight);
      good_used[e.good] = false;
      slot_used[e.slot] = false;
    }
  };
  rec(rec, 0, Rational(0));
  return best;
}

// Max of v_agent over every ranking of `agent`, others fixed.
inline Rational BruteBestResponseValue(const Instance& inst, AgentId agent,
                                       Profile profile) {
  std::vector<GoodId> order(inst.num_goods());
  std::iota(order.begin(), order.end(), 0);
  std::optional<Rational> best;
  do {
    profile[agent] = Ranking(order);
    Rational v = inst.valuation(agent).Value(
        RoundRobin(inst, profile).allocation[agent]);
    if (!best || v > *best) best = std::move(v);
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

// min over agents of v_i(A_i) / brute best response, zero responses
// counting as 1.
inline Rational BrutePneFactor(const Instance& inst, const Profile& profile) {
  const Allocation a = RoundRobin(inst, profile).allocation;
  Rational factor(1);
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const Rational br = BruteBestResponseValue(inst, i, profile);
    if (br.IsZero()) continue;
    factor = Min(factor, inst.valuation(i).Value(a[i]) / br);
  }
  return factor;
}

// Smallest v_i(A_i) / min_g v_i(A_j - g) over ordered pairs whose
// denominator is positive; nullopt when every pair is unconstrained.
inline std::optional<Rational> BruteEf1(const Instance& inst,
                                        const Allocation& a) {
  std::optional<Rational> out;
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const Valuation& v = inst.valuation(i);
    for (AgentId j = 0; j < inst.num_agents(); ++j) {
      if (i == j || a[j].empty()) continue;
      std::optional<Rational> least;
      for (GoodId g : a[j].Goods()) {
        Rational x = v.Value(a[j].Without(g));
        if (!least || x < *least) least = x;
      }
      if (least->IsZero()) continue;
      Rational r = v.Value(a[i]) / *least;
      if (!out || r < *out) out = r;
    }
  }
  return out;
}

inline Profile RandomProfile(int n, int m, std::mt19937_64& rng) {
  Profile p;
  for (int i = 0; i < n; ++i) {
    std::vector<GoodId> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    p.emplace_back(std::move(order));
  }
  return p;
}

// Seeded instance drawn from one of the listed classes.
inline Instance RandomInstance(const std::vector<GeneratorClass>& classes,
                               int n, int m, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.cls = classes[seed % classes.size()];
  spec.num_agents = n;
  spec.num_goods = m;
  spec.seed = seed;
  return Generate(spec);
}

}  // namespace rrfair::testing

#endif  // RRFAIR_TESTS_ORACLES_H_
