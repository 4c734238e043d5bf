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

#include "rrfair/fairness.h"

#include <string>

#include "rrfair/errors.h"

namespace rrfair {

namespace {

void RequirePartition(const Instance& inst, const Allocation& alloc) {
  if (alloc.num_agents() != inst.num_agents() ||
      !alloc.IsPartitionOf(inst.num_goods())) {
    throw InvalidArgument(
        "allocation does not partition the instance's goods among its " +
        std::to_string(inst.num_agents()) + " agents");
  }
}

Factor RatioOrUnbounded(const Rational& num, const Rational& den) {
  if (den.IsZero()) return Factor::Unbounded();
  return Factor::Of(num / den);
}

PairRatio ScorePair(const Instance& inst, const Allocation& alloc, AgentId i,
                    AgentId j) {
  const Valuation& v = inst.valuation(i);
  const Rational own = v.Value(alloc[i]);
  PairRatio out{i, j, Factor::Unbounded(), -1,
                RatioOrUnbounded(own, v.Value(alloc[j]))};
  std::optional<Rational> least;
  alloc[j].ForEach([&](GoodId g) {
    Rational rest = v.Value(alloc[j].Without(g));
    if (!least || rest < *least) {
      least = std::move(rest);
      out.removed = g;
    }
  });
  if (least) out.ef1 = RatioOrUnbounded(own, *least);
  return out;
}

}  // namespace

const PairRatio& FairnessReport::pair(AgentId i, AgentId j) const {
  for (const PairRatio& p : pairs) {
    if (p.i == i && p.j == j) return p;
  }
  throw InvalidArgument("no pair (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") in report");
}

Factor EfFactor(const Instance& inst, const Allocation& alloc) {
  return ScoreFairness(inst, alloc).ef_factor;
}

FairnessReport ScoreFairness(const Instance& inst, const Allocation& alloc) {
  RequirePartition(inst, alloc);
  FairnessReport report;
  report.num_agents = inst.num_agents();
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    for (AgentId j = 0; j < inst.num_agents(); ++j) {
      if (i == j) continue;
      PairRatio p = ScorePair(inst, alloc, i, j);
      if (p.ef1 < report.ef1_factor) {
        report.ef1_factor = p.ef1;
        report.worst_pair = p;
      }
      if (p.ef < report.ef_factor) report.ef_factor = p.ef;
      report.pairs.push_back(std::move(p));
    }
  }
  return report;
}

bool Ef1FromPerspective(const Instance& inst, const Allocation& alloc,
                        AgentId i, const Rational& alpha) {
  RequirePartition(inst, alloc);
  for (AgentId j = 0; j < inst.num_agents(); ++j) {
    if (j == i) continue;
    if (!ScorePair(inst, alloc, i, j).ef1.AtLeast(alpha)) return false;
  }
  return true;
}

}  // namespace rrfair
