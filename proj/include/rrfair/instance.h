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

#ifndef RRFAIR_INSTANCE_H_
#define RRFAIR_INSTANCE_H_

#include <string>
#include <vector>

#include "rrfair/valuation.h"

namespace rrfair {

// n agents, m goods and one valuation per agent, all over the same m goods.
class Instance {
 public:
  // Throws InvalidArgument when there are no agents, no goods, or a
  // valuation is defined over a different number of goods.
  Instance(std::vector<Valuation> valuations, std::string description = "");

  int num_agents() const { return static_cast<int>(valuations_.size()); }
  int num_goods() const { return num_goods_; }
  const Valuation& valuation(AgentId i) const { return valuations_.at(i); }
  const std::vector<Valuation>& valuations() const { return valuations_; }
  const std::string& description() const { return description_; }

  // Goods per agent once m is a multiple of n.
  int rounds() const { return (num_goods_ + num_agents() - 1) / num_agents(); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.valuations_ == b.valuations_ && a.description_ == b.description_;
  }

 private:
  int num_goods_ = 0;
  std::vector<Valuation> valuations_;
  std::string description_;
};

struct PaddedInstance {
  Instance instance;
  int padding = 0;  // Dummy goods appended after the real ones.

  int real_goods() const { return instance.num_goods() - padding; }
};

// Appends n - (m mod n) zero-marginal dummy goods (none when n divides m).
// Dummies take the highest indices.
PaddedInstance PadToMultiple(const Instance& inst);

}  // namespace rrfair

#endif  // RRFAIR_INSTANCE_H_
