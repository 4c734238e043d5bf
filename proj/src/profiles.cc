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
#include <optional>
#include <string>

#include "rrfair/errors.h"

namespace rrfair {

namespace {

void RequireMultiple(const Instance& inst) {
  if (inst.num_goods() % inst.num_agents() != 0) {
    throw InvalidArgument("good count " + std::to_string(inst.num_goods()) +
                          " is not a multiple of agent count " +
                          std::to_string(inst.num_agents()) +
                          "; pad the instance first");
  }
}

// Available good of largest marginal value to `held`; smallest index wins,
// unless `by_singleton` puts larger singleton values first among equals.
GoodId GreedyPick(const Valuation& v, Bundle available, Bundle held,
                  bool by_singleton = false) {
  const Rational base = v.Value(held);
  std::optional<GoodId> best;
  Rational best_gain;
  available.ForEach([&](GoodId g) {
    Rational gain = v.Value(held.With(g)) - base;
    if (!best || gain > best_gain ||
        (by_singleton && gain == best_gain &&
         v.Singleton(g) > v.Singleton(*best))) {
      best = g;
      best_gain = std::move(gain);
    }
  });
  return *best;
}

}  // namespace

Ranking TruthfulRanking(const Valuation& v) {
  const int m = v.num_goods();
  std::vector<Rational> singles(m);
  for (GoodId g = 0; g < m; ++g) singles[g] = v.Singleton(g);
  std::vector<GoodId> order(m);
  for (GoodId g = 0; g < m; ++g) order[g] = g;
  std::stable_sort(order.begin(), order.end(), [&](GoodId a, GoodId b) {
    return singles[a] > singles[b];
  });
  return Ranking(std::move(order));
}

Profile TruthfulProfile(const Instance& inst) {
  Profile p;
  for (const Valuation& v : inst.valuations()) p.push_back(TruthfulRanking(v));
  return p;
}

BluffOrder ComputeBluffOrder(const Instance& inst) {
  RequireMultiple(inst);
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  std::vector<GoodId> order;
  std::vector<AgentId> picker;
  std::vector<int> round;
  Allocation allocation{std::vector<Bundle>(n)};
  std::vector<std::vector<GoodId>> picks(n);
  Bundle available = Bundle::Full(m);
  for (int j = 0; j < m; ++j) {
    const AgentId i = j % n;
    const GoodId g =
        GreedyPick(inst.valuation(i), available, allocation.bundles[i], true);
    order.push_back(g);
    picker.push_back(i);
    round.push_back(j / n + 1);
    allocation.bundles[i] = allocation.bundles[i].With(g);
    picks[i].push_back(g);
    available = available.Without(g);
  }
  return BluffOrder{Ranking(std::move(order)), std::move(picker),
                    std::move(round), std::move(allocation), std::move(picks)};
}

Profile BluffProfile(const Instance& inst) {
  const Ranking order = ComputeBluffOrder(inst).order;
  return Profile(inst.num_agents(), order);
}

std::vector<GoodId> DeviationRenaming(const std::vector<GoodId>& x, Bundle y,
                                      const Valuation& v) {
  const int count = y.size();
  if (count > static_cast<int>(x.size()) + 1) {
    throw InvalidArgument("cannot rename " + std::to_string(count) +
                          " goods against a prefix of " +
                          std::to_string(x.size()));
  }
  std::vector<GoodId> out(count);
  Bundle remaining = y;
  for (int j = count; j >= 1; --j) {
    const Bundle prefix = Bundle::FromGoods(
        std::vector<GoodId>(x.begin(), x.begin() + (j - 1)));
    std::optional<GoodId> chosen;
    Rational least;
    remaining.ForEach([&](GoodId g) {
      Rational gain = v.Marginal(g, prefix);
      if (!chosen || gain <= least) {
        chosen = g;
        least = std::move(gain);
      }
    });
    out[j - 1] = *chosen;
    remaining = remaining.Without(*chosen);
  }
  return out;
}

Ranking GreedyResponse(const Instance& inst, AgentId agent,
                       const Profile& profile) {
  RequireMultiple(inst);
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  if (agent < 0 || agent >= n) {
    throw InvalidArgument("agent index " + std::to_string(agent) +
                          " outside [0, " + std::to_string(n) + ")");
  }
  if (static_cast<int>(profile.size()) != n) {
    throw InvalidArgument("malformed profile: expected " + std::to_string(n) +
                          " rankings");
  }
  const Valuation& v = inst.valuation(agent);
  Bundle available = Bundle::Full(m);
  Bundle held;
  std::vector<GoodId> order;
  for (int step = 0; step < m; ++step) {
    const AgentId i = step % n;
    GoodId g;
    if (i == agent) {
      g = GreedyPick(v, available, held);
      held = held.With(g);
      order.push_back(g);
    } else {
      if (profile[i].size() != m) {
        throw InvalidArgument("malformed profile: ranking of agent " +
                              std::to_string(i + 1) + " has wrong length");
      }
      g = profile[i].Top(available);
    }
    available = available.Without(g);
  }
  for (GoodId g = 0; g < m; ++g) {
    if (!held.Contains(g)) order.push_back(g);
  }
  return Ranking(std::move(order));
}

}  // namespace rrfair
