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

#include "rrfair/valuation.h"

#include <cstdint>
#include <string>
#include <utility>

#include "rrfair/errors.h"

namespace rrfair {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequireGoodCount(int m) {
  if (m < 0 || m > kMaxGoods) {
    throw InvalidArgument("good count " + std::to_string(m) +
                          " outside [0, " + std::to_string(kMaxGoods) + "]");
  }
}

void RequireNonNegative(const std::vector<Rational>& weights,
                        std::string_view what) {
  for (std::size_t g = 0; g < weights.size(); ++g) {
    if (weights[g].Sign() < 0) {
      throw InvalidArgument(std::string(what) + " weight of " +
                            GoodName(static_cast<GoodId>(g)) +
                            " is negative");
    }
  }
}

Rational SumOver(const std::vector<Rational>& weights, Bundle s) {
  Rational total;
  s.ForEach([&](GoodId g) { total += weights[g]; });
  return total;
}

bool SameWeights(const std::vector<WeightedEdge>& a,
                 const std::vector<WeightedEdge>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].good != b[i].good || a[i].slot != b[i].slot ||
        a[i].weight != b[i].weight) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view KindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kAdditive:
      return "additive";
    case ValuationKind::kBudgetAdditive:
      return "budget_additive";
    case ValuationKind::kUnitDemand:
      return "unit_demand";
    case ValuationKind::kOxs:
      return "oxs";
    case ValuationKind::kTable:
      return "table";
  }
  return "unknown";
}

Valuation Valuation::Additive(std::vector<Rational> weights) {
  RequireGoodCount(static_cast<int>(weights.size()));
  RequireNonNegative(weights, "additive");
  const int m = static_cast<int>(weights.size());
  return Valuation(m, AdditiveValuation{std::move(weights)});
}

Valuation Valuation::BudgetAdditive(std::vector<Rational> weights,
                                    Rational cap) {
  RequireGoodCount(static_cast<int>(weights.size()));
  RequireNonNegative(weights, "budget-additive");
  if (cap.Sign() < 0) throw InvalidArgument("budget-additive cap is negative");
  const int m = static_cast<int>(weights.size());
  return Valuation(m,
                   BudgetAdditiveValuation{std::move(weights), std::move(cap)});
}

Valuation Valuation::UnitDemand(std::vector<Rational> weights) {
  RequireGoodCount(static_cast<int>(weights.size()));
  RequireNonNegative(weights, "unit-demand");
  const int m = static_cast<int>(weights.size());
  return Valuation(m, UnitDemandValuation{std::move(weights)});
}

Valuation Valuation::Oxs(int num_goods, std::vector<std::string> slot_labels,
                         std::vector<WeightedEdge> edges) {
  RequireGoodCount(num_goods);
  const int slots = static_cast<int>(slot_labels.size());
  for (const WeightedEdge& e : edges) {
    if (e.good < 0 || e.good >= num_goods) {
      throw InvalidArgument("OXS edge references good index " +
                            std::to_string(e.good) + " outside [0, " +
                            std::to_string(num_goods) + ")");
    }
    if (e.slot < 0 || e.slot >= slots) {
      throw InvalidArgument("OXS edge references unknown slot " +
                            std::to_string(e.slot));
    }
    if (e.weight.Sign() < 0) {
      throw InvalidArgument("OXS edge weight is negative");
    }
  }
  return Valuation(num_goods, OxsValuation{num_goods, std::move(slot_labels),
                                           std::move(edges)});
}

Valuation Valuation::Table(int num_goods, std::vector<Rational> values) {
  if (num_goods < 0 || num_goods > kMaxTableGoods) {
    throw SizeGuardExceeded("table valuation over " +
                            std::to_string(num_goods) +
                            " goods exceeds the limit of " +
                            std::to_string(kMaxTableGoods));
  }
  const std::size_t expected = std::size_t{1} << num_goods;
  if (values.size() != expected) {
    throw InvalidArgument("table valuation over " + std::to_string(num_goods) +
                          " goods needs " + std::to_string(expected) +
                          " entries, got " + std::to_string(values.size()));
  }
  if (!values[0].IsZero()) {
    throw InvalidArgument("table valuation is not normalized: v(empty) = " +
                          values[0].ToString());
  }
  for (std::uint64_t s = 0; s < expected; ++s) {
    if (values[s].Sign() < 0) {
      throw InvalidArgument("table valuation has a negative entry");
    }
    for (int g = 0; g < num_goods; ++g) {
      const std::uint64_t bit = std::uint64_t{1} << g;
      if ((s & bit) == 0 && values[s | bit] < values[s]) {
        throw InvalidArgument("table valuation is not monotone: v(" +
                              FormatBundle(Bundle(s | bit)) + ") < v(" +
                              FormatBundle(Bundle(s)) + ")");
      }
    }
  }
  return Valuation(num_goods, TableValuation{num_goods, std::move(values)});
}

ValuationKind Valuation::kind() const {
  return static_cast<ValuationKind>(rep_.index());
}

Rational Valuation::Value(Bundle s) const {
  if (!s.IsSubsetOf(Bundle::Full(num_goods_))) {
    throw InvalidArgument("bundle " + FormatBundle(s) +
                          " has goods outside [0, " +
                          std::to_string(num_goods_) + ")");
  }
  return std::visit(
      Overloaded{
          [&](const AdditiveValuation& a) { return SumOver(a.weights, s); },
          [&](const BudgetAdditiveValuation& b) {
            return Min(b.cap, SumOver(b.weights, s));
          },
          [&](const UnitDemandValuation& u) {
            Rational best;
            s.ForEach([&](GoodId g) { best = Max(best, u.weights[g]); });
            return best;
          },
          [&](const OxsValuation& o) {
            return MaxWeightMatching(o.edges,
                                     static_cast<int>(o.slot_labels.size()), s);
          },
          [&](const TableValuation& t) { return t.values[s.mask()]; },
      },
      rep_);
}

Rational Valuation::Marginal(GoodId g, Bundle s) const {
  if (g < 0 || g >= num_goods_) {
    throw InvalidArgument("good index " + std::to_string(g) +
                          " outside [0, " + std::to_string(num_goods_) + ")");
  }
  if (s.Contains(g)) {
    Value(s);  // range check only
    return Rational(0);
  }
  return Value(s.With(g)) - Value(s);
}

Valuation Valuation::WithDummyGoods(int extra) const {
  if (extra < 0) throw InvalidArgument("negative dummy good count");
  const int m = num_goods_ + extra;
  auto padded = [&](const std::vector<Rational>& w) {
    std::vector<Rational> out = w;
    out.resize(m);
    return out;
  };
  return std::visit(
      Overloaded{
          [&](const AdditiveValuation& a) {
            return Additive(padded(a.weights));
          },
          [&](const BudgetAdditiveValuation& b) {
            return BudgetAdditive(padded(b.weights), b.cap);
          },
          [&](const UnitDemandValuation& u) {
            return UnitDemand(padded(u.weights));
          },
          [&](const OxsValuation& o) {
            return Oxs(m, o.slot_labels, o.edges);
          },
          [&](const TableValuation& t) {
            if (m > kMaxTableGoods) {
              throw SizeGuardExceeded(
                  "padding a table valuation beyond " +
                  std::to_string(kMaxTableGoods) + " goods");
            }
            const std::uint64_t real = Bundle::Full(num_goods_).mask();
            std::vector<Rational> values(std::size_t{1} << m);
            for (std::uint64_t s = 0; s < values.size(); ++s) {
              values[s] = t.values[s & real];
            }
            return Valuation(m, TableValuation{m, std::move(values)});
          },
      },
      rep_);
}

bool operator==(const AdditiveValuation& a, const AdditiveValuation& b) {
  return a.weights == b.weights;
}
bool operator==(const BudgetAdditiveValuation& a,
                const BudgetAdditiveValuation& b) {
  return a.weights == b.weights && a.cap == b.cap;
}
bool operator==(const UnitDemandValuation& a, const UnitDemandValuation& b) {
  return a.weights == b.weights;
}
bool operator==(const OxsValuation& a, const OxsValuation& b) {
  return a.num_goods == b.num_goods && a.slot_labels == b.slot_labels &&
         SameWeights(a.edges, b.edges);
}
bool operator==(const TableValuation& a, const TableValuation& b) {
  return a.num_goods == b.num_goods && a.values == b.values;
}

bool operator==(const Valuation& a, const Valuation& b) {
  return a.num_goods_ == b.num_goods_ && a.rep_ == b.rep_;
}

std::vector<Rational> Tabulate(const Valuation& v, int max_goods) {
  const int m = v.num_goods();
  if (m > max_goods) {
    throw SizeGuardExceeded("tabulating " + std::to_string(m) +
                            " goods exceeds the limit of " +
                            std::to_string(max_goods));
  }
  if (const auto* t = std::get_if<TableValuation>(&v.representation())) {
    return t->values;
  }
  std::vector<Rational> values(std::size_t{1} << m);
  for (std::uint64_t s = 0; s < values.size(); ++s) {
    values[s] = v.Value(Bundle(s));
  }
  return values;
}

}  // namespace rrfair
