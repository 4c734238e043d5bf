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

#include "rrfair/serialization.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>
#include <variant>
#include <vector>

#include "rrfair/errors.h"

namespace rrfair {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void RequireObject(const json& j, const std::string& where,
                   const std::set<std::string>& required,
                   const std::set<std::string>& optional) {
  if (!j.is_object()) Fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      Fail(where, "unknown field \"" + key + "\"");
    }
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) Fail(where, "missing field \"" + key + "\"");
  }
}

int IntegerField(const json& j, const std::string& where) {
  if (!j.is_number_integer()) Fail(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > (std::int64_t{1} << 30)) Fail(where, "out of range");
  return static_cast<int>(v);
}

std::vector<Rational> RationalArray(const json& j, std::size_t length,
                                    const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array");
  if (j.size() != length) {
    Fail(where, "expected " + std::to_string(length) + " entries, got " +
                    std::to_string(j.size()));
  }
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      out.push_back(RationalFromJson(j[k]));
    } catch (const ParseError& e) {
      Fail(where + "[" + std::to_string(k) + "]", e.what());
    }
  }
  return out;
}

json RationalArrayToJson(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(RationalToJson(r));
  return out;
}

std::string SlotLabel(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  Fail(where, "slot label must be a string or an integer");
}

Valuation ValuationFromJson(const json& j, int m, const std::string& where) {
  if (!j.is_object() || !j.contains("class") || !j["class"].is_string()) {
    Fail(where, "expected an object with a string \"class\"");
  }
  const std::string cls = j["class"].get<std::string>();
  if (cls == "additive" || cls == "unit_demand") {
    RequireObject(j, where, {"class", "weights"}, {});
    auto w = RationalArray(j["weights"], m, where + ".weights");
    return cls == "additive" ? Valuation::Additive(std::move(w))
                             : Valuation::UnitDemand(std::move(w));
  }
  if (cls == "budget_additive") {
    RequireObject(j, where, {"class", "weights", "cap"}, {});
    auto w = RationalArray(j["weights"], m, where + ".weights");
    Rational cap;
    try {
      cap = RationalFromJson(j["cap"]);
    } catch (const ParseError& e) {
      Fail(where + ".cap", e.what());
    }
    return Valuation::BudgetAdditive(std::move(w), std::move(cap));
  }
  if (cls == "oxs") {
    RequireObject(j, where, {"class", "edges"}, {"slots"});
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    const bool fixed = j.contains("slots");
    if (fixed) {
      if (!j["slots"].is_array()) Fail(where + ".slots", "expected an array");
      for (const json& s : j["slots"]) {
        std::string label = SlotLabel(s, where + ".slots");
        if (!index.emplace(label, static_cast<int>(labels.size())).second) {
          Fail(where + ".slots", "duplicate slot \"" + label + "\"");
        }
        labels.push_back(std::move(label));
      }
    }
    const json& edges = j["edges"];
    if (!edges.is_array()) Fail(where + ".edges", "expected an array");
    std::vector<WeightedEdge> out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string at = where + ".edges[" + std::to_string(k) + "]";
      const json& e = edges[k];
      if (!e.is_array() || e.size() != 3) {
        Fail(at, "expected [good, slot, \"p/q\"]");
      }
      const int good = IntegerField(e[0], at + "[0]");
      if (good >= m) Fail(at, "good index out of range");
      std::string label = SlotLabel(e[1], at + "[1]");
      auto it = index.find(label);
      if (it == index.end()) {
        if (fixed) Fail(at, "slot \"" + label + "\" not listed in slots");
        it = index.emplace(label, static_cast<int>(labels.size())).first;
        labels.push_back(label);
      }
      Rational weight;
      try {
        weight = RationalFromJson(e[2]);
      } catch (const ParseError& err) {
        Fail(at + "[2]", err.what());
      }
      out.push_back({good, it->second, std::move(weight)});
    }
    return Valuation::Oxs(m, std::move(labels), std::move(out));
  }
  if (cls == "table") {
    RequireObject(j, where, {"class", "table"}, {});
    if (m > kMaxTableGoods) {
      throw SizeGuardExceeded("table valuations need m <= " +
                              std::to_string(kMaxTableGoods));
    }
    return Valuation::Table(
        m, RationalArray(j["table"], std::size_t{1} << m, where + ".table"));
  }
  Fail(where, "unknown class \"" + cls + "\"");
}

json ValuationToJson(const Valuation& v) {
  return std::visit(
      [](const auto& rep) -> json {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, AdditiveValuation>) {
          return {{"class", "additive"},
                  {"weights", RationalArrayToJson(rep.weights)}};
        } else if constexpr (std::is_same_v<T, BudgetAdditiveValuation>) {
          return {{"class", "budget_additive"},
                  {"weights", RationalArrayToJson(rep.weights)},
                  {"cap", RationalToJson(rep.cap)}};
        } else if constexpr (std::is_same_v<T, UnitDemandValuation>) {
          return {{"class", "unit_demand"},
                  {"weights", RationalArrayToJson(rep.weights)}};
        } else if constexpr (std::is_same_v<T, OxsValuation>) {
          json edges = json::array();
          for (const WeightedEdge& e : rep.edges) {
            edges.push_back(json::array({e.good, rep.slot_labels[e.slot],
                                         RationalToJson(e.weight)}));
          }
          return {{"class", "oxs"},
                  {"slots", rep.slot_labels},
                  {"edges", std::move(edges)}};
        } else {
          return {{"class", "table"},
                  {"table", RationalArrayToJson(rep.values)}};
        }
      },
      v.representation());
}

json ParseText(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

json RationalToJson(const Rational& r) { return r.ToString(); }

Rational RationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_float()) {
    throw ParseError("floating-point number " + j.dump() +
                     " rejected; write rationals as \"p/q\" strings");
  }
  throw ParseError("expected a rational, got " + j.dump());
}

json InstanceToJson(const Instance& inst) {
  json agents = json::array();
  for (const Valuation& v : inst.valuations()) {
    agents.push_back(ValuationToJson(v));
  }
  json out = {{"n", inst.num_agents()},
              {"m", inst.num_goods()},
              {"agents", std::move(agents)}};
  if (!inst.description().empty()) out["description"] = inst.description();
  return out;
}

Instance InstanceFromJson(const json& j) {
  RequireObject(j, "instance", {"n", "m", "agents"}, {"description"});
  const int n = IntegerField(j["n"], "instance.n");
  const int m = IntegerField(j["m"], "instance.m");
  if (n < 1 || m < 1) Fail("instance", "n and m must be at least 1");
  if (m > kMaxGoods) {
    Fail("instance.m", "at most " + std::to_string(kMaxGoods) + " goods");
  }
  const json& agents = j["agents"];
  if (!agents.is_array() || static_cast<int>(agents.size()) != n) {
    Fail("instance.agents", "expected an array of " + std::to_string(n) +
                                " agents");
  }
  std::string description;
  if (j.contains("description")) {
    if (!j["description"].is_string()) {
      Fail("instance.description", "expected a string");
    }
    description = j["description"].get<std::string>();
  }
  std::vector<Valuation> valuations;
  for (int i = 0; i < n; ++i) {
    valuations.push_back(ValuationFromJson(
        agents[i], m, "instance.agents[" + std::to_string(i) + "]"));
  }
  return Instance(std::move(valuations), std::move(description));
}

std::string SaveInstance(const Instance& inst) {
  return InstanceToJson(inst).dump(2) + "\n";
}

Instance LoadInstance(std::string_view text) {
  return InstanceFromJson(ParseText(text));
}

Instance LoadInstanceFile(const std::string& path) {
  return LoadInstance(ReadFile(path));
}

void SaveInstanceFile(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << SaveInstance(inst);
}

json ProfileToJson(const Profile& profile) {
  json out = json::array();
  for (const Ranking& r : profile) out.push_back(r.order());
  return out;
}

Profile ProfileFromJson(const json& j, int num_agents, int num_goods) {
  if (!j.is_array() || static_cast<int>(j.size()) != num_agents) {
    Fail("profile", "expected an array of " + std::to_string(num_agents) +
                        " rankings");
  }
  Profile out;
  for (int i = 0; i < num_agents; ++i) {
    const std::string where = "profile[" + std::to_string(i) + "]";
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != num_goods) {
      Fail(where, "expected a permutation of " + std::to_string(num_goods) +
                      " goods");
    }
    std::vector<GoodId> order;
    for (const json& g : j[i]) order.push_back(IntegerField(g, where));
    try {
      out.emplace_back(std::move(order));
    } catch (const InvalidArgument& e) {
      Fail(where, e.what());
    }
  }
  return out;
}

Profile LoadProfileFile(const std::string& path, int num_agents,
                        int num_goods) {
  return ProfileFromJson(ParseText(ReadFile(path)), num_agents, num_goods);
}

}  // namespace rrfair
