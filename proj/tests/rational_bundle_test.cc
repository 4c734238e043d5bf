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

#include <gtest/gtest.h>

#include "rrfair/bundle.h"
#include "rrfair/errors.h"
#include "rrfair/rational.h"

namespace rrfair {
namespace {

TEST(RationalTest, ParsesAndReduces) {
  EXPECT_EQ(Rational::Parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::Parse("6/3").ToString(), "2");
  EXPECT_EQ(Rational(1001, 3003).ToString(), "1/3");
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_THROW(Rational::Parse("1/0"), ParseError);
  EXPECT_THROW(Rational::Parse("0.5"), ParseError);
  EXPECT_THROW(Rational::Parse(""), ParseError);
  EXPECT_THROW(Rational::Parse("1/2/3"), ParseError);
  EXPECT_THROW(Rational::Parse("abc"), ParseError);
}

TEST(RationalTest, ExactArithmetic) {
  const Rational eps(1, 100);
  EXPECT_EQ(Rational(1) / (Rational(2) - eps - Rational(2, 100)),
            Rational(100, 197));
  EXPECT_THROW(Rational(1) / Rational(0), InvalidArgument);
  EXPECT_LT(Rational(1001, 3003), Rational(1001, 3001));
  EXPECT_EQ(Min(Rational(1, 3), Rational(1, 2)), Rational(1, 3));
}

TEST(FactorTest, UnboundedDominates) {
  const Factor u = Factor::Unbounded();
  const Factor half = Factor::Of(Rational(1, 2));
  EXPECT_GT(u, half);
  EXPECT_TRUE(u.AtLeast(Rational(1000)));
  EXPECT_TRUE(half.AtLeast(Rational(1, 2)));
  EXPECT_FALSE(half.AtLeast(Rational(51, 100)));
  EXPECT_EQ(u.ToString(), "unbounded");
}

TEST(BundleTest, SetOperations) {
  const Bundle a{0, 2, 4};
  const Bundle b{2, 3};
  EXPECT_EQ((a | b), (Bundle{0, 2, 3, 4}));
  EXPECT_EQ((a & b), (Bundle{2}));
  EXPECT_EQ((a - b), (Bundle{0, 4}));
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE((Bundle{2}).IsSubsetOf(a));
  EXPECT_EQ(Bundle::Full(3), (Bundle{0, 1, 2}));
  EXPECT_EQ(FormatBundle(a), "{g1,g3,g5}");
  EXPECT_EQ(FormatSequence({2, 0}), "g3>g1");
}

}  // namespace
}  // namespace rrfair
