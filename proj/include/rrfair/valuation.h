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

#ifndef RRFAIR_VALUATION_H_
#define RRFAIR_VALUATION_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rrfair/bundle.h"
#include "rrfair/matching.h"
#include "rrfair/rational.h"

namespace rrfair {

// Largest good count a Table valuation may store (2^20 entries).
inline constexpr int kMaxTableGoods = 20;

struct AdditiveValuation {
  std::vector<Rational> weights;
};

// v(S) = min(cap, sum of weights in S).
struct BudgetAdditiveValuation {
  std::vector<Rational> weights;
  Rational cap;
};

// v(S) = max weight in S, 0 on the empty set.
struct UnitDemandValuation {
  std::vector<Rational> weights;
};

// v(S) = maximum-weight matching between S and a set of abstract slots.
struct OxsValuation {
  int num_goods = 0;
  std::vector<std::string> slot_labels;
  std::vector<WeightedEdge> edges;
};

// Explicit value per subset, indexed by bitmask (bit t = good t).
struct TableValuation {
  int num_goods = 0;
  std::vector<Rational> values;
};

enum class ValuationKind { kAdditive, kBudgetAdditive, kUnitDemand, kOxs, kTable };

std::string_view KindName(ValuationKind kind);

// Immutable set-function oracle over goods 0..m-1 returning exact values.
// Every variant is normalized (v(empty) = 0) and non-decreasing; the closed
// forms are monotone by construction and Table is validated on construction.
class Valuation {
 public:
  using Representation =
      std::variant<AdditiveValuation, BudgetAdditiveValuation,
                   UnitDemandValuation, OxsValuation, TableValuation>;

  // Validating factories. Throw InvalidArgument on negative weights,
  // out-of-range edge endpoints, wrong table size, v(empty) != 0 or a
  // table that is not monotone.
  static Valuation Additive(std::vector<Rational> weights);
  static Valuation BudgetAdditive(std::vector<Rational> weights, Rational cap);
  static Valuation UnitDemand(std::vector<Rational> weights);
  static Valuation Oxs(int num_goods, std::vector<std::string> slot_labels,
                       std::vector<WeightedEdge> edges);
  static Valuation Table(int num_goods, std::vector<Rational> values);

  int num_goods() const { return num_goods_; }
  ValuationKind kind() const;
  const Representation& representation() const { return rep_; }

  // Throws InvalidArgument if `s` has goods outside [0, m).
  Rational Value(Bundle s) const;
  // v(S + g) - v(S).
  Rational Marginal(GoodId g, Bundle s) const;
  Rational Singleton(GoodId g) const { return Value(Bundle{g}); }

  // Same function over m + extra goods; the new goods have zero marginal
  // value with respect to every set.
  Valuation WithDummyGoods(int extra) const;

  friend bool operator==(const Valuation& a, const Valuation& b);

 private:
  Valuation(int num_goods, Representation rep)
      : num_goods_(num_goods), rep_(std::move(rep)) {}

  int num_goods_ = 0;
  Representation rep_;
};

bool operator==(const AdditiveValuation& a, const AdditiveValuation& b);
bool operator==(const BudgetAdditiveValuation& a,
                const BudgetAdditiveValuation& b);
bool operator==(const UnitDemandValuation& a, const UnitDemandValuation& b);
bool operator==(const OxsValuation& a, const OxsValuation& b);
bool operator==(const TableValuation& a, const TableValuation& b);

// Dense table of v over all 2^m subsets. Throws SizeGuardExceeded when m
// exceeds `max_goods`.
std::vector<Rational> Tabulate(const Valuation& v,
                               int max_goods = kMaxTableGoods);

}  // namespace rrfair

#endif  // RRFAIR_VALUATION_H_
