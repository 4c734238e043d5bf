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

#include "rrfair/instance.h"

#include <string>
#include <utility>

#include "rrfair/errors.h"

namespace rrfair {

Instance::Instance(std::vector<Valuation> valuations, std::string description)
    : valuations_(std::move(valuations)), description_(std::move(description)) {
  if (valuations_.empty()) throw InvalidArgument("instance has no agents");
  num_goods_ = valuations_.front().num_goods();
  if (num_goods_ < 1) throw InvalidArgument("instance has no goods");
  for (std::size_t i = 0; i < valuations_.size(); ++i) {
    if (valuations_[i].num_goods() != num_goods_) {
      throw InvalidArgument("valuation of agent " + std::to_string(i + 1) +
                            " is over " +
                            std::to_string(valuations_[i].num_goods()) +
                            " goods, expected " + std::to_string(num_goods_));
    }
  }
}

PaddedInstance PadToMultiple(const Instance& inst) {
  const int n = inst.num_agents();
  const int rem = inst.num_goods() % n;
  if (rem == 0) return {inst, 0};
  const int extra = n - rem;
  std::vector<Valuation> padded;
  padded.reserve(n);
  for (const Valuation& v : inst.valuations()) {
    padded.push_back(v.WithDummyGoods(extra));
  }
  return {Instance(std::move(padded), inst.description()), extra};
}

}  // namespace rrfair
