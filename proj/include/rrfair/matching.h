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

#ifndef RRFAIR_MATCHING_H_
#define RRFAIR_MATCHING_H_

#include <span>
#include <vector>

#include "rrfair/bundle.h"
#include "rrfair/rational.h"

namespace rrfair {

// Edge of a goods-to-slots bipartite graph. Weights are non-negative.
struct WeightedEdge {
  GoodId good = 0;
  int slot = 0;
  Rational weight;
};

// Maximum total weight of a matching that uses only goods in `goods`.
// Shortest-augmenting-path Hungarian method with exact rational potentials.
// Parallel edges collapse to their heaviest weight.
Rational MaxWeightMatching(std::span<const WeightedEdge> edges, int num_slots,
                           Bundle goods);

}  // namespace rrfair

#endif  // RRFAIR_MATCHING_H_
