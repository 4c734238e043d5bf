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

#include "rrfair/profiles.h"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rrfair/certificates.h"
#include "rrfair/fairness.h"
#include "rrfair/fixtures.h"
#include "rrfair/generators.h"

namespace rrfair {
namespace {

using testing::Q;
using testing::RandomInstance;
using testing::RandomProfile;

TEST(TruthfulRankingTest, SortsBySingletonValue) {
  const Instance thm9 = AdditiveEf1TightnessInstance();
  EXPECT_EQ(TruthfulRanking(thm9.valuation(0)), Ranking::Identity(5));
  const Instance thm4 = BluffTightnessInstance();
  EXPECT_EQ(TruthfulRanking(thm4.valuation(1)), Ranking::Identity(5));
  EXPECT_EQ(TruthfulRanking(Valuation::Additive(
                std::vector<Rational>(4, Rational(1)))),
            Ranking::Identity(4));
  EXPECT_EQ(TruthfulRanking(Valuation::Additive(
                {Rational(1), Rational(3), Rational(2)})),
            Ranking({1, 2, 0}));
}

TEST(BluffOrderTest, Fixtures) {
  const PaddedInstance thm4 = PadToMultiple(BluffTightnessInstance());
  const BluffOrder b4 = ComputeBluffOrder(thm4.instance);
  EXPECT_EQ(b4.order, Ranking::Identity(6));
  EXPECT_EQ(b4.allocation.StrippedTo(5)[0], (Bundle{0, 2, 4}));
  EXPECT_EQ(b4.allocation.StrippedTo(5)[1], (Bundle{1, 3}));
  EXPECT_EQ(b4.picker, (std::vector<AgentId>{0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(b4.round, (std::vector<int>{1, 1, 2, 2, 3, 3}));
  const PaddedInstance thm9 = PadToMultiple(AdditiveEf1TightnessInstance());
  EXPECT_EQ(ComputeBluffOrder(thm9.instance).order, Ranking::Identity(6));
}

TEST(BluffOrderTest, SingleAdditiveAgentSortsByWeight) {
  const Instance inst({Valuation::Additive({Rational(1), Rational(4),
                                            Rational(2)})});
  EXPECT_EQ(ComputeBluffOrder(inst).order, Ranking({1, 2, 0}));
  const Profile p = BluffProfile(inst);
  ASSERT_EQ(p.size(), 1u);
}

TEST(DeviationRenamingTest, AdditiveDescendingWeight) {
  const Valuation v =
      Valuation::Additive({Rational(5), Rational(1), Rational(3), Rational(0)});
  EXPECT_EQ(DeviationRenaming({3, 1}, Bundle{0, 1, 2}, v),
            (std::vector<GoodId>{0, 2, 1}));
  EXPECT_EQ(DeviationRenaming({}, Bundle{2}, v), (std::vector<GoodId>{2}));
}

TEST(DeviationRenamingTest, NoPneTieKeepsLargerIndexLast) {
  const Valuation v1 = NoPneInstance().valuation(0);
  EXPECT_EQ(DeviationRenaming({0, 3}, Bundle{1, 2}, v1),
            (std::vector<GoodId>{1, 2}));
}

TEST(GreedyResponseTest, BluffTightnessDiffersFromBestResponse) {
  const PaddedInstance p = PadToMultiple(BluffTightnessInstance());
  const Profile others = {Ranking::Identity(6), Ranking::Identity(6)};
  const Ranking r = GreedyResponse(p.instance, 1, others);
  EXPECT_EQ(r[0], 1);
  EXPECT_EQ(r[1], 3);
  const Allocation a = RoundRobin(p.instance, {others[0], r}).allocation;
  EXPECT_EQ(a.StrippedTo(5)[1], (Bundle{1, 3}));
  EXPECT_EQ(p.instance.valuation(1).Value(a[1]), Rational(1));
}

TEST(GreedyResponseTest, AdditiveTakesHeaviestAvailable) {
  const Instance inst(
      {Valuation::Additive({Rational(1), Rational(2), Rational(3),
                            Rational(4)}),
       Valuation::Additive({Rational(4), Rational(1), Rational(3),
                            Rational(2)})});
  const Ranking r =
      GreedyResponse(inst, 1, {Ranking({0, 1, 2, 3}), Ranking::Identity(4)});
  // Agent 1 takes g1 and g2 while agent 2 takes g3 and g4.
  EXPECT_EQ(r.order(), (std::vector<GoodId>{2, 3, 0, 1}));
}

// The greedy bundles equal the mechanism's output on the bluff profile,
// and for cancelable instances equals the truthful allocation too.
TEST(BluffPropertyTest, AllocationConsistencyAndTruthfulEquivalence) {
  const std::vector<GeneratorClass> cancelable = {
      GeneratorClass::kAdditive, GeneratorClass::kBudgetAdditive,
      GeneratorClass::kUnitDemand};
  for (std::uint64_t seed = 0; seed < 90; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const int m = n * (1 + static_cast<int>(seed % 3));
    const Instance inst = RandomInstance(cancelable, n, m, seed);
    const BluffOrder b = ComputeBluffOrder(inst);
    const Allocation bluff = RoundRobin(inst, BluffProfile(inst)).allocation;
    EXPECT_EQ(bluff, b.allocation);
    EXPECT_EQ(bluff, RoundRobin(inst, TruthfulProfile(inst)).allocation);
  }
}

// For submodular v_i, bluff picks x_1..x_k and any deviation bundle Y
// renamed against them, v(x_j | X_{<j}) >= v(y_j | X_{<j}). Deviation
// bundles are enumerated through all rankings of agent i.
TEST(BluffPropertyTest, RenamedDeviationsAreDominated) {
  const std::vector<GeneratorClass> submodular = {
      GeneratorClass::kOxs, GeneratorClass::kSubmodularTable};
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const int n = 2;
    const int m = seed % 2 ? 6 : 4;
    const Instance inst = RandomInstance(submodular, n, m, seed);
    const BluffOrder b = ComputeBluffOrder(inst);
    const Profile bluff = BluffProfile(inst);
    for (AgentId i = 0; i < n; ++i) {
      const std::vector<GoodId>& x = b.picks[i];
      const Valuation& v = inst.valuation(i);
      std::vector<GoodId> order(m);
      std::iota(order.begin(), order.end(), 0);
      do {
        Profile p = bluff;
        p[i] = Ranking(order);
        const Bundle y = RoundRobin(inst, p).allocation[i];
        const std::vector<GoodId> renamed = DeviationRenaming(x, y, v);
        ASSERT_EQ(Bundle::FromGoods(renamed), y);
        Bundle prefix;
        for (std::size_t j = 0; j < x.size(); ++j) {
          EXPECT_GE(v.Marginal(x[j], prefix), v.Marginal(renamed[j], prefix));
          prefix = prefix.With(x[j]);
        }
        ++checked;
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  EXPECT_GT(checked, 0);
}

// The greedy response allocation is 1/2-EF1 from i's perspective for
// submodular v_i, whatever the others report.
TEST(GreedyResponsePropertyTest, HalfEf1FromOwnPerspective) {
  const std::vector<GeneratorClass> submodular = {
      GeneratorClass::kOxs, GeneratorClass::kSubmodularTable};
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const int m = n * (1 + static_cast<int>(seed % 3));
    const Instance inst = RandomInstance(submodular, n, m, seed);
    for (AgentId i = 0; i < n; ++i) {
      Profile p = RandomProfile(n, m, rng);
      p[i] = GreedyResponse(inst, i, p);
      const Allocation a = RoundRobin(inst, p).allocation;
      EXPECT_TRUE(Ef1FromPerspective(inst, a, i, Q("1/2")))
          << "seed " << seed << " agent " << i;
    }
  }
}

}  // namespace
}  // namespace rrfair
