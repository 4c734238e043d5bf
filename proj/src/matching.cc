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

#include "rrfair/matching.h"

#include <algorithm>
#include <vector>

namespace rrfair {

namespace {

// Minimum-cost assignment of every row to a distinct column, rows <= cols.
// `cost` is row-major, 0-based. Returns the optimal total cost.
Rational MinCostAssignment(const std::vector<std::vector<Rational>>& cost) {
  const int rows = static_cast<int>(cost.size());
  if (rows == 0) return Rational(0);
  const int cols = static_cast<int>(cost[0].size());

  // 1-based potentials; column 0 is the virtual root of each search.
  std::vector<Rational> row_pot(rows + 1), col_pot(cols + 1);
  std::vector<int> match(cols + 1, 0), way(cols + 1, 0);

  for (int r = 1; r <= rows; ++r) {
    match[0] = r;
    int col0 = 0;
    std::vector<Rational> slack(cols + 1);
    std::vector<bool> slack_set(cols + 1, false);
    std::vector<bool> used(cols + 1, false);
    do {
      used[col0] = true;
      const int row0 = match[col0];
      int col1 = 0;
      bool have_delta = false;
      Rational delta;
      for (int c = 1; c <= cols; ++c) {
        if (used[c]) continue;
        Rational reduced = cost[row0 - 1][c - 1] - row_pot[row0] - col_pot[c];
        if (!slack_set[c] || reduced < slack[c]) {
          slack[c] = std::move(reduced);
          slack_set[c] = true;
          way[c] = col0;
        }
        if (!have_delta || slack[c] < delta) {
          delta = slack[c];
          have_delta = true;
          col1 = c;
        }
      }
      for (int c = 0; c <= cols; ++c) {
        if (used[c]) {
          row_pot[match[c]] += delta;
          col_pot[c] -= delta;
        } else {
          slack[c] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const int col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  return -col_pot[0];
}

}  // namespace

Rational MaxWeightMatching(std::span<const WeightedEdge> edges, int num_slots,
                           Bundle goods) {
  // Only goods that are present and have at least one edge matter.
  std::vector<GoodId> left;
  for (const WeightedEdge& e : edges) {
    if (goods.Contains(e.good) &&
        std::find(left.begin(), left.end(), e.good) == left.end()) {
      left.push_back(e.good);
    }
  }
  if (left.empty() || num_slots == 0) return Rational(0);
  std::sort(left.begin(), left.end());
  const int num_left = static_cast<int>(left.size());

  std::vector<std::vector<Rational>> weight(
      num_left, std::vector<Rational>(num_slots));
  for (const WeightedEdge& e : edges) {
    if (!goods.Contains(e.good)) continue;
    const auto row = std::lower_bound(left.begin(), left.end(), e.good) -
                     left.begin();
    weight[row][e.slot] = Max(weight[row][e.slot], e.weight);
  }

  // Non-edges weigh zero, so a full assignment on the smaller side has the
  // same optimum as a maximum-weight matching. Costs are negated weights.
  const bool transpose = num_left > num_slots;
  const int rows = transpose ? num_slots : num_left;
  const int cols = transpose ? num_left : num_slots;
  std::vector<std::vector<Rational>> cost(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      cost[r][c] = -(transpose ? weight[c][r] : weight[r][c]);
    }
  }
  return -MinCostAssignment(cost);
}

}  // namespace rrfair
