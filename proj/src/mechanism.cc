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

#include "rrfair/mechanism.h"

#include <string>
#include <utility>

#include "rrfair/errors.h"

namespace rrfair {

Ranking::Ranking(std::vector<GoodId> order) : order_(std::move(order)) {
  const int m = static_cast<int>(order_.size());
  if (m > kMaxGoods) {
    throw InvalidArgument("ranking over " + std::to_string(m) +
                          " goods exceeds " + std::to_string(kMaxGoods));
  }
  position_.assign(m, -1);
  for (int p = 0; p < m; ++p) {
    const GoodId g = order_[p];
    if (g < 0 || g >= m) {
      throw InvalidArgument("ranking entry " + std::to_string(g) +
                            " outside [0, " + std::to_string(m) + ")");
    }
    if (position_[g] != -1) {
      throw InvalidArgument("ranking lists " + GoodName(g) + " twice");
    }
    position_[g] = p;
  }
}

Ranking Ranking::Identity(int m) {
  std::vector<GoodId> order(m);
  for (int g = 0; g < m; ++g) order[g] = g;
  return Ranking(std::move(order));
}

GoodId Ranking::Top(Bundle available) const {
  for (GoodId g : order_) {
    if (available.Contains(g)) return g;
  }
  throw InvalidArgument("no available good to pick");
}

Ranking Ranking::ExtendedTo(int m) const {
  std::vector<GoodId> order = order_;
  for (GoodId g = size(); g < m; ++g) order.push_back(g);
  return Ranking(std::move(order));
}

Ranking Ranking::RestrictedTo(int m) const {
  std::vector<GoodId> order;
  for (GoodId g : order_) {
    if (g < m) order.push_back(g);
  }
  return Ranking(std::move(order));
}

bool Allocation::IsPartitionOf(int m) const {
  Bundle seen;
  for (const Bundle& b : bundles) {
    if (!(b & seen).empty()) return false;
    seen = seen | b;
  }
  return seen == Bundle::Full(m);
}

Allocation Allocation::StrippedTo(int real_goods) const {
  Allocation out;
  for (const Bundle& b : bundles) {
    out.bundles.push_back(b & Bundle::Full(real_goods));
  }
  return out;
}

Bundle Trace::AllocatedBeforeTurn(AgentId agent, int r) const {
  const std::size_t count = static_cast<std::size_t>(r) * num_agents_ + agent;
  Bundle out;
  for (std::size_t k = 0; k < count && k < steps_.size(); ++k) {
    out = out.With(steps_[k].good);
  }
  return out;
}

std::vector<GoodId> Trace::PicksOf(AgentId agent) const {
  std::vector<GoodId> out;
  for (const Step& s : steps_) {
    if (s.agent == agent) out.push_back(s.good);
  }
  return out;
}

RoundRobinRun RoundRobin(const Profile& profile) {
  const int n = static_cast<int>(profile.size());
  if (n == 0) throw InvalidArgument("profile has no rankings");
  const int m = profile.front().size();
  for (int i = 1; i < n; ++i) {
    if (profile[i].size() != m) {
      throw InvalidArgument("malformed profile: ranking of agent " +
                            std::to_string(i + 1) + " covers " +
                            std::to_string(profile[i].size()) +
                            " goods, expected " + std::to_string(m));
    }
  }
  if (m % n != 0) {
    throw InvalidArgument("good count " + std::to_string(m) +
                          " is not a multiple of agent count " +
                          std::to_string(n) + "; pad the instance first");
  }

  Allocation allocation{std::vector<Bundle>(n)};
  std::vector<Step> steps;
  steps.reserve(m);
  Bundle available = Bundle::Full(m);
  const int rounds = m / n;
  for (int r = 1; r <= rounds; ++r) {
    for (AgentId i = 0; i < n; ++i) {
      const GoodId g = profile[i].Top(available);
      allocation.bundles[i] = allocation.bundles[i].With(g);
      available = available.Without(g);
      steps.push_back(Step{r, i, g});
    }
  }
  return {std::move(allocation), Trace(n, std::move(steps))};
}

RoundRobinRun RoundRobin(const Instance& inst, const Profile& profile) {
  if (static_cast<int>(profile.size()) != inst.num_agents()) {
    throw InvalidArgument("malformed profile: " +
                          std::to_string(profile.size()) + " rankings for " +
                          std::to_string(inst.num_agents()) + " agents");
  }
  for (const Ranking& r : profile) {
    if (r.size() != inst.num_goods()) {
      throw InvalidArgument("malformed profile: ranking covers " +
                            std::to_string(r.size()) + " goods, instance has " +
                            std::to_string(inst.num_goods()));
    }
  }
  return RoundRobin(profile);
}

Profile ExtendProfile(const Profile& profile, int m) {
  Profile out;
  out.reserve(profile.size());
  for (const Ranking& r : profile) out.push_back(r.ExtendedTo(m));
  return out;
}

bool DeviationPrefixGapBounded(const Trace& base, const Trace& deviated,
                               AgentId agent) {
  for (int r = 1; r <= base.rounds(); ++r) {
    const Bundle s = base.AllocatedBeforeTurn(agent, r - 1);
    const Bundle s_dev = deviated.AllocatedBeforeTurn(agent, r - 1);
    if ((s_dev - s).size() > r - 1) return false;
  }
  return true;
}

bool DeviationPrefixShareBounded(const Allocation& base, const Trace& deviated,
                                 AgentId agent) {
  const Bundle first = deviated.AllocatedBeforeTurn(agent, 0);
  for (int r = 1; r <= deviated.rounds(); ++r) {
    const Bundle later = deviated.AllocatedBeforeTurn(agent, r - 1) - first;
    for (const Bundle& held : base.bundles) {
      if ((held & later).size() > 2 * (r - 1)) return false;
    }
  }
  return true;
}

}  // namespace rrfair
