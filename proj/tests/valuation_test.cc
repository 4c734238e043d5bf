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

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rrfair/errors.h"
#include "rrfair/fixtures.h"
#include "rrfair/valuation.h"

namespace rrfair {
namespace {

using testing::BruteMatching;
using testing::Q;

TEST(ValuationTest, OxsMatchesFigureValues) {
  const Instance inst = BluffTightnessInstance();
  const Valuation& v2 = inst.valuation(1);
  EXPECT_EQ(v2.Value(Bundle{0, 1}), Rational(3));
  EXPECT_EQ(v2.Value(Bundle{0, 3, 4}), Rational(3) - Q("2/100"));
  EXPECT_EQ(v2.Value(Bundle{2, 3}), Rational(2) - Q("3/100"));
}

TEST(ValuationTest, OxsSecondFigure) {
  const Instance inst = OxsEf1TightnessInstance();
  const Valuation& v4 = inst.valuation(3);
  EXPECT_EQ(v4.Value(Bundle{5, 7}), Rational(1) + Q("1/1000"));
  EXPECT_EQ(v4.Value(Bundle{0}), Rational(3));
}

TEST(ValuationTest, TableValuesAndMarginals) {
  const Valuation v1 = NoPneInstance().valuation(0);
  EXPECT_EQ(v1.Value(Bundle{1, 2}), Rational(4));
  EXPECT_EQ(v1.Marginal(1, Bundle{0}), Rational(1));
  EXPECT_EQ(v1.Marginal(0, Bundle{0, 2}), Rational(0));
}

TEST(ValuationTest, Normalization) {
  EXPECT_EQ(Valuation::Additive({Rational(3)}).Value(Bundle()), Rational(0));
  EXPECT_EQ(Valuation::UnitDemand({Rational(3), Rational(1)}).Value(Bundle()),
            Rational(0));
  EXPECT_THROW(Valuation::Table(1, {Rational(1), Rational(2)}),
               InvalidArgument);
}

TEST(ValuationTest, ClosedForms) {
  const Valuation b =
      Valuation::BudgetAdditive({Rational(3), Rational(2)}, Rational(4));
  EXPECT_EQ(b.Value(Bundle{0, 1}), Rational(4));
  EXPECT_EQ(b.Value(Bundle{1}), Rational(2));
  const Valuation u = Valuation::UnitDemand({Rational(3), Rational(5)});
  EXPECT_EQ(u.Value(Bundle{0, 1}), Rational(5));
  const Valuation a = Valuation::Additive({Q("1/3"), Q("1/6")});
  EXPECT_EQ(a.Marginal(1, Bundle{0}), Q("1/6"));
}

TEST(ValuationTest, RejectsOutOfRangeGoods) {
  const Valuation a = Valuation::Additive({Rational(1), Rational(1)});
  EXPECT_THROW(a.Value(Bundle{2}), InvalidArgument);
  EXPECT_THROW(Valuation::Additive({Rational(-1)}), InvalidArgument);
}

TEST(ValuationTest, RejectsNonMonotoneTable) {
  // v(g0) = 2 but v({g0, g1}) = 1.
  EXPECT_THROW(Valuation::Table(2, {Rational(0), Rational(2), Rational(0),
                                    Rational(1)}),
               InvalidArgument);
}

TEST(ValuationTest, TableGuard) {
  EXPECT_THROW(Valuation::Table(21, {}), SizeGuardExceeded);
}

TEST(ValuationTest, DummyGoodsAddNothing) {
  const Valuation v1 = NoPneInstance().valuation(0);
  const Valuation padded = v1.WithDummyGoods(2);
  ASSERT_EQ(padded.num_goods(), 6);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    EXPECT_EQ(padded.Value(Bundle(mask)), v1.Value(Bundle(mask & 15)));
  }
}

// Oxs value against enumeration of every matching, on random graphs with at
// most 8 edges.
TEST(ValuationPropertyTest, OxsAgreesWithEnumeratedMatchings) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int slots = 1 + static_cast<int>(rng() % 4);
    const int num_edges = 1 + static_cast<int>(rng() % 8);
    std::vector<WeightedEdge> edges;
    std::vector<std::string> labels;
    for (int s = 0; s < slots; ++s) labels.push_back(std::to_string(s));
    for (int e = 0; e < num_edges; ++e) {
      edges.push_back({static_cast<GoodId>(rng() % m),
                       static_cast<int>(rng() % slots),
                       Rational(static_cast<std::int64_t>(rng() % 13),
                                1 + static_cast<std::int64_t>(rng() % 3))});
    }
    const Valuation v = Valuation::Oxs(m, labels, edges);
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
      ASSERT_EQ(v.Value(Bundle(mask)), BruteMatching(edges, Bundle(mask)))
          << "trial " << trial << " mask " << mask;
    }
  }
}

}  // namespace
}  // namespace rrfair
