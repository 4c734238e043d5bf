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

// Constructive ranking procedures: truthful rankings, the greedy common
// ("bluff") order, greedy renaming of a deviating agent's bundle, and the
// greedy response to fixed opponents. Every argmax/argmin breaks ties
// deterministically.

#ifndef RRFAIR_PROFILES_H_
#define RRFAIR_PROFILES_H_

#include <vector>

#include "rrfair/instance.h"
#include "rrfair/mechanism.h"

namespace rrfair {

// Goods by descending singleton value; equal values by ascending index.
Ranking TruthfulRanking(const Valuation& v);
Profile TruthfulProfile(const Instance& inst);

struct BluffOrder {
  Ranking order;                  // h_1, ..., h_m
  std::vector<AgentId> picker;    // picker[j]: agent that selected order[j]
  std::vector<int> round;         // round[j]: 1-based round of that pick
  Allocation allocation;          // bundles accumulated by the greedy picks
  std::vector<std::vector<GoodId>> picks;  // per agent, in pick order
};

// Agents take turns 0,1,...,n-1,0,... and each takes the unallocated good of
// largest marginal value to her own accumulated bundle. Equal marginals go
// to the larger singleton value, then the smaller index. For cancelable
// agents the order coincides with truthful Round-Robin. Requires m to be a
// multiple of n.
BluffOrder ComputeBluffOrder(const Instance& inst);

// n copies of the bluff order.
Profile BluffProfile(const Instance& inst);

// Orders `y` against the prefix sequence `x` (in allocation order): slots
// are filled from last to first, slot j taking the remaining good of least
// marginal value with respect to {x_1..x_{j-1}}. Among equal marginals the
// largest index takes the later slot, so tied goods end up ascending.
// Requires |y| <= |x| + 1.
std::vector<GoodId> DeviationRenaming(const std::vector<GoodId>& x, Bundle y,
                                      const Valuation& v);

// Simulates Round-Robin with every agent but `agent` following `profile`;
// at each of her turns `agent` takes the available good of largest marginal
// value to what she holds (smallest index on ties). Returns her picks in
// order followed by the remaining goods ascending. Replaying the mechanism
// with this ranking gives her exactly the picked goods.
Ranking GreedyResponse(const Instance& inst, AgentId agent,
                       const Profile& profile);

}  // namespace rrfair

#endif  // RRFAIR_PROFILES_H_
