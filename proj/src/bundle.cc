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

#include "rrfair/bundle.h"

namespace rrfair {

std::string FormatBundle(Bundle b) {
  std::string out = "{";
  bool first = true;
  b.ForEach([&](GoodId g) {
    if (!first) out += ",";
    out += GoodName(g);
    first = false;
  });
  return out + "}";
}

std::string FormatSequence(const std::vector<GoodId>& goods) {
  std::string out;
  for (std::size_t i = 0; i < goods.size(); ++i) {
    if (i > 0) out += ">";
    out += GoodName(goods[i]);
  }
  return out;
}

}  // namespace rrfair
