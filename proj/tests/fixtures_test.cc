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

#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rrfair/certificates.h"
#include "rrfair/errors.h"

namespace rrfair {
namespace {

using testing::Q;

std::string ErrorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

TEST(FixturesTest, NoPneValues) {
  const Instance inst = NoPneInstance();
  ASSERT_EQ(inst.num_agents(), 2);
  ASSERT_EQ(inst.num_goods(), 4);
  EXPECT_EQ(inst.valuation(1).Value(Bundle{2, 3}), Rational(4));
  EXPECT_EQ(inst.valuation(0).Value(Bundle{2, 3}), Rational(3));
  for (const Valuation& v : inst.valuations()) {
    for (GoodId g = 0; g < 4; ++g) EXPECT_EQ(v.Singleton(g), Rational(2));
    EXPECT_EQ(v.Value(Bundle{0, 1, 2}), Rational(4));
    EXPECT_EQ(v.Value(Bundle::Full(4)), Rational(4));
  }
}

TEST(FixturesTest, BluffTightnessValues) {
  const Instance inst = BluffTightnessInstance();
  EXPECT_EQ(inst.valuation(0).Singleton(0), Rational(2));
  EXPECT_EQ(inst.valuation(0).Singleton(3), Rational(1) - Q("2/100"));
  EXPECT_NE(inst.description().find("g4"), std::string::npos);
  EXPECT_EQ(inst.valuation(1).kind(), ValuationKind::kOxs);
}

TEST(FixturesTest, OxsTightnessValues) {
  const Instance inst = OxsEf1TightnessInstance();
  ASSERT_EQ(inst.num_agents(), 4);
  ASSERT_EQ(inst.num_goods(), 9);
  EXPECT_EQ(inst.valuation(3).Singleton(0), Rational(3));
  EXPECT_EQ(inst.valuation(0).Singleton(4), Rational(2));
}

TEST(FixturesTest, ConstraintViolationsNameTheInequality) {
  AdditiveEf1TightnessParams thm9;
  thm9.beta = Q("1/6");
  EXPECT_NE(ErrorOf([&] { AdditiveEf1TightnessInstance(thm9); })
                .find("beta > 1/6 + delta"),
            std::string::npos);
  BluffTightnessParams thm4;
  thm4.eps2 = thm4.eps1;
  EXPECT_NE(ErrorOf([&] { BluffTightnessInstance(thm4); })
                .find("eps2 > eps1"),
            std::string::npos);
  OxsEf1TightnessParams prop10;
  prop10.beta = Q("1/2");
  EXPECT_NE(ErrorOf([&] { OxsEf1TightnessInstance(prop10); })
                .find("beta > (1 + eps4)/2"),
            std::string::npos);
  std::swap(prop10.eps[0], prop10.eps[3]);
  EXPECT_NE(ErrorOf([&] { OxsEf1TightnessInstance(prop10); }).find("eps1 >"),
            std::string::npos);
}

TEST(FixturesTest, CertifiedClasses) {
  const Instance prop3 = NoPneInstance();
  for (const Valuation& v : prop3.valuations()) {
    EXPECT_TRUE(CheckSubmodular(v).holds);
  }
  EXPECT_TRUE(CheckSubmodular(BluffTightnessInstance().valuation(1)).holds);
  EXPECT_TRUE(CheckSubmodular(OxsEf1TightnessInstance().valuation(3)).holds);
  const Instance thm9 = AdditiveEf1TightnessInstance();
  for (const Valuation& v : thm9.valuations()) {
    EXPECT_TRUE(CheckCancelable(v).holds);
  }
}

TEST(FixturesTest, Names) {
  for (FixtureId id : {FixtureId::kNoPne, FixtureId::kBluffTightness,
                       FixtureId::kAdditiveEf1, FixtureId::kOxsEf1}) {
    EXPECT_EQ(ParseFixtureName(FixtureName(id)), id);
  }
  EXPECT_EQ(FixtureName(FixtureId::kNoPne), "prop3");
  EXPECT_FALSE(ParseFixtureName("thm5").has_value());
}

}  // namespace
}  // namespace rrfair
