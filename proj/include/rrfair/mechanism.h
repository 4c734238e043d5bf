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

#ifndef RRFAIR_MECHANISM_H_
#define RRFAIR_MECHANISM_H_

#include <vector>

#include "rrfair/bundle.h"
#include "rrfair/instance.h"

namespace rrfair {

// A strict total order over all goods; position 0 is the most preferred.
class Ranking {
 public:
  // Throws InvalidArgument unless `order` is a permutation of [0, m).
  explicit Ranking(std::vector<GoodId> order);
  static Ranking Identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<GoodId>& order() const { return order_; }
  GoodId operator[](int position) const { return order_[position]; }
  int PositionOf(GoodId g) const { return position_.at(g); }

  // Most preferred good of `available`. Precondition: non-empty subset.
  GoodId Top(Bundle available) const;

  // Same order followed by goods size()..m-1 ascending (dummy padding).
  Ranking ExtendedTo(int m) const;
  // Drops goods >= m, keeping the relative order of the rest.
  Ranking RestrictedTo(int m) const;

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const Ranking& a, const Ranking& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<GoodId> order_;
  std::vector<int> position_;
};

// One ranking per agent; index order is priority order.
using Profile = std::vector<Ranking>;

// Bundles indexed by agent.
struct Allocation {
  std::vector<Bundle> bundles;

  int num_agents() const { return static_cast<int>(bundles.size()); }
  const Bundle& operator[](AgentId i) const { return bundles[i]; }
  // Pairwise disjoint with union exactly [0, m).
  bool IsPartitionOf(int m) const;
  // Removes goods with index >= real_goods.
  Allocation StrippedTo(int real_goods) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct Step {
  int round = 0;  // 1-based
  AgentId agent = 0;
  GoodId good = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

// Every step of one run, in execution order (round-major, agent-minor).
class Trace {
 public:
  Trace(int num_agents, std::vector<Step> steps)
      : num_agents_(num_agents), steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const { return steps_; }
  int num_agents() const { return num_agents_; }
  int rounds() const {
    return num_agents_ == 0 ? 0
                            : static_cast<int>(steps_.size()) / num_agents_;
  }

  // Goods allocated before `agent` receives her (r+1)-th good, i.e. in the
  // first r*n + agent steps. Valid for 0 <= r < rounds().
  Bundle AllocatedBeforeTurn(AgentId agent, int r) const;
  // Goods of `agent` in the order she received them.
  std::vector<GoodId> PicksOf(AgentId agent) const;

 private:
  int num_agents_ = 0;
  std::vector<Step> steps_;
};

struct RoundRobinRun {
  Allocation allocation;
  Trace trace;
};

// Runs the Round-Robin mechanism: in each round agents 0..n-1 in turn take
// their top remaining good. Throws InvalidArgument for a malformed profile
// (differing good counts) or when m is not a multiple of n; pad first.
RoundRobinRun RoundRobin(const Profile& profile);
// As above, additionally checking the profile covers the instance's goods.
RoundRobinRun RoundRobin(const Instance& inst, const Profile& profile);

// Extends every ranking with dummy goods up to m, ascending.
Profile ExtendProfile(const Profile& profile, int m);

// Given a run and the run where only `agent` changed her ranking, checks
// |S'_{r-1} \ S_{r-1}| <= r-1 for every round r, where S and S' are the
// goods allocated before the agent's r-th turn in each run.
bool DeviationPrefixGapBounded(const Trace& base, const Trace& deviated,
                               AgentId agent);

// Checks |A_j intersect (S'_{r-1} \ S'_0)| <= 2(r-1) for every agent j and
// round r, where A is the base allocation and S' the deviated run's prefixes.
bool DeviationPrefixShareBounded(const Allocation& base, const Trace& deviated,
                                 AgentId agent);

}  // namespace rrfair

#endif  // RRFAIR_MECHANISM_H_
