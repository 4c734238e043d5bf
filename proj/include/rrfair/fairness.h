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

#ifndef RRFAIR_FAIRNESS_H_
#define RRFAIR_FAIRNESS_H_

#include <optional>
#include <vector>

#include "rrfair/instance.h"
#include "rrfair/mechanism.h"
#include "rrfair/rational.h"

namespace rrfair {

// Agent i's view of agent j's bundle.
struct PairRatio {
  AgentId i = 0;
  AgentId j = 0;
  // v_i(A_i) / min over g in A_j of v_i(A_j \ {g}). Unbounded when the
  // denominator is zero or A_j is empty (no constraint).
  Factor ef1;
  // Good whose removal gives the binding denominator; -1 when A_j is empty.
  GoodId removed = -1;
  // v_i(A_i) / v_i(A_j); unbounded when v_i(A_j) = 0.
  Factor ef;
};

struct FairnessReport {
  int num_agents = 0;
  std::vector<PairRatio> pairs;  // all ordered pairs i != j, row-major
  Factor ef1_factor = Factor::Unbounded();
  Factor ef_factor = Factor::Unbounded();
  // First pair (row-major) attaining ef1_factor; empty when unbounded.
  std::optional<PairRatio> worst_pair;

  const PairRatio& pair(AgentId i, AgentId j) const;
};

// Largest alpha with v_i(A_i) >= alpha * v_i(A_j) for all pairs. Factors
// are raw and may exceed 1. Throws InvalidArgument unless `alloc`
// partitions the instance's goods.
Factor EfFactor(const Instance& inst, const Allocation& alloc);

// Full per-pair EF and EF1 scoring.
FairnessReport ScoreFairness(const Instance& inst, const Allocation& alloc);

// True iff every one of agent i's EF1 pair ratios is at least alpha.
bool Ef1FromPerspective(const Instance& inst, const Allocation& alloc,
                        AgentId i, const Rational& alpha);

}  // namespace rrfair

#endif  // RRFAIR_FAIRNESS_H_
