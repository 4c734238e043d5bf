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

// JSON instance documents.
//
//   {
//     "n": 2, "m": 3,
//     "description": "optional",
//     "agents": [
//       {"class": "additive", "weights": ["1", "1/2", "0"]},
//       {"class": "budget_additive", "weights": [...], "cap": "3/2"},
//       {"class": "unit_demand", "weights": [...]},
//       {"class": "oxs", "edges": [[0, "s1", "2"], [2, "s1", "1/3"]],
//        "slots": ["s1", "s2"]},
//       {"class": "table", "table": ["0", "1", ...]}
//     ]
//   }
//
// Goods are 0-based. Rationals are "p" or "p/q" strings (JSON integers are
// also accepted); floating-point numbers are rejected. OXS slot labels may
// be strings or integers; "slots" is optional and fixes slot order,
// otherwise slots appear in order of first use. Table entries are indexed by
// subset bitmask with bit t standing for good t. Unknown fields are errors.

#ifndef RRFAIR_SERIALIZATION_H_
#define RRFAIR_SERIALIZATION_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "rrfair/instance.h"
#include "rrfair/mechanism.h"

namespace rrfair {

nlohmann::json RationalToJson(const Rational& r);
// Throws ParseError on floats, booleans and malformed strings.
Rational RationalFromJson(const nlohmann::json& j);

nlohmann::json InstanceToJson(const Instance& inst);
// Throws ParseError on schema violations and InvalidArgument when a
// valuation is rejected (for example a non-monotone table).
Instance InstanceFromJson(const nlohmann::json& j);

std::string SaveInstance(const Instance& inst);
Instance LoadInstance(std::string_view text);
Instance LoadInstanceFile(const std::string& path);
void SaveInstanceFile(const Instance& inst, const std::string& path);

// Profiles are arrays of n arrays, each a permutation of [0, m).
nlohmann::json ProfileToJson(const Profile& profile);
Profile ProfileFromJson(const nlohmann::json& j, int num_agents,
                        int num_goods);
Profile LoadProfileFile(const std::string& path, int num_agents,
                        int num_goods);

}  // namespace rrfair

#endif  // RRFAIR_SERIALIZATION_H_
