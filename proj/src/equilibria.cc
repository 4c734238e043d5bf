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

#include "rrfair/equilibria.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>

#include "rrfair/certificates.h"
#include "rrfair/errors.h"

namespace rrfair {

namespace {

struct MaskPairHash {
  std::size_t operator()(
      const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9e3779b97f4a7c15ULL ^
                                      k.second);
  }
};

void ValidateProfileShape(const Instance& inst, const Profile& profile,
                          AgentId skip) {
  if (static_cast<int>(profile.size()) != inst.num_agents()) {
    throw InvalidArgument("malformed profile: expected " +
                          std::to_string(inst.num_agents()) +
                          " rankings, got " + std::to_string(profile.size()));
  }
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    if (i != skip && profile[i].size() != inst.num_goods()) {
      throw InvalidArgument("malformed profile: ranking of agent " +
                            std::to_string(i + 1) + " has " +
                            std::to_string(profile[i].size()) +
                            " goods, expected " +
                            std::to_string(inst.num_goods()));
    }
  }
}

std::uint64_t Factorial(int k) {
  std::uint64_t f = 1;
  for (int t = 2; t <= k; ++t) {
    if (f > std::numeric_limits<std::uint64_t>::max() / t) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= t;
  }
  return f;
}

// Permutation of [0, m) with the given lexicographic rank.
Ranking UnrankPermutation(int m, std::uint64_t rank) {
  std::vector<GoodId> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<GoodId> out;
  out.reserve(m);
  for (int k = m; k >= 1; --k) {
    const std::uint64_t block = Factorial(k - 1);
    const std::uint64_t digit = rank / block;
    rank %= block;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Ranking(std::move(out));
}

Profile UnrankProfile(int n, int m, std::uint64_t index) {
  const std::uint64_t per_agent = Factorial(m);
  Profile p(n, Ranking::Identity(m));
  for (int i = n - 1; i >= 0; --i) {
    p[i] = UnrankPermutation(m, index % per_agent);
    index /= per_agent;
  }
  return p;
}

}  // namespace

struct EquilibriumAnalyzer::SearchState {
  AgentId agent;
  const Profile& profile;
  std::uint64_t explored = 0;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Continuation,
                     MaskPairHash>
      memo;
};

EquilibriumAnalyzer::EquilibriumAnalyzer(Instance inst)
    : inst_(std::move(inst)) {
  if (inst_.num_goods() % inst_.num_agents() != 0) {
    throw InvalidArgument("good count " + std::to_string(inst_.num_goods()) +
                          " is not a multiple of agent count " +
                          std::to_string(inst_.num_agents()) +
                          "; pad the instance first");
  }
  if (inst_.num_goods() > kBestResponseGuard) {
    throw SizeGuardExceeded("best response needs m <= " +
                            std::to_string(kBestResponseGuard) + ", got m = " +
                            std::to_string(inst_.num_goods()));
  }
  const std::size_t subsets = std::size_t{1} << inst_.num_goods();
  values_.assign(inst_.num_agents(), std::vector<Rational>(subsets));
  known_.assign(inst_.num_agents(), std::vector<bool>(subsets, false));
}

const Rational& EquilibriumAnalyzer::ValueOf(AgentId agent, Bundle s) {
  const std::uint64_t key = s.mask();
  if (!known_[agent][key]) {
    values_[agent][key] = inst_.valuation(agent).Value(s);
    known_[agent][key] = true;
  }
  return values_[agent][key];
}

const EquilibriumAnalyzer::Continuation& EquilibriumAnalyzer::Search(
    SearchState& state, Bundle available, Bundle held) {
  const int n = inst_.num_agents();
  const int m = inst_.num_goods();
  int step = m - available.size();
  while (step < m && step % n != state.agent) {
    available = available.Without(state.profile[step % n].Top(available));
    ++step;
  }
  const auto key = std::make_pair(available.mask(), held.mask());
  if (auto it = state.memo.find(key); it != state.memo.end()) {
    return it->second;
  }
  ++state.explored;
  Continuation result;
  if (step == m) {
    result.value = ValueOf(state.agent, held);
  } else {
    bool found = false;
    for (GoodId g : available.Goods()) {
      const Continuation& child =
          Search(state, available.Without(g), held.With(g));
      if (!found || child.value > result.value) {
        found = true;
        result.value = child.value;
        result.picks.assign(1, g);
        result.picks.insert(result.picks.end(), child.picks.begin(),
                            child.picks.end());
      }
    }
  }
  return state.memo.emplace(key, std::move(result)).first->second;
}

BestResponse EquilibriumAnalyzer::BestResponseOf(AgentId agent,
                                                 const Profile& profile) {
  if (agent < 0 || agent >= inst_.num_agents()) {
    throw InvalidArgument("agent index " + std::to_string(agent) +
                          " outside [0, " +
                          std::to_string(inst_.num_agents()) + ")");
  }
  ValidateProfileShape(inst_, profile, agent);
  SearchState state{agent, profile, 0, {}};
  const Continuation& best =
      Search(state, Bundle::Full(inst_.num_goods()), Bundle());
  std::vector<GoodId> order = best.picks;
  const Bundle bundle = Bundle::FromGoods(order);
  for (GoodId g = 0; g < inst_.num_goods(); ++g) {
    if (!bundle.Contains(g)) order.push_back(g);
  }
  return BestResponse{Ranking(std::move(order)), bundle, best.value,
                      state.explored};
}

EquilibriumReport EquilibriumAnalyzer::Analyze(const Profile& profile) {
  ValidateProfileShape(inst_, profile, -1);
  EquilibriumReport report;
  report.allocation = RoundRobin(inst_, profile).allocation;
  report.pne_factor = Rational(1);
  for (AgentId i = 0; i < inst_.num_agents(); ++i) {
    AgentEquilibrium entry{ValueOf(i, report.allocation[i]),
                           BestResponseOf(i, profile), Factor::Unbounded()};
    if (!entry.best.value.IsZero()) {
      entry.ratio = Factor::Of(entry.current_value / entry.best.value);
      report.pne_factor = Min(report.pne_factor, entry.ratio.value());
    }
    report.per_agent.push_back(std::move(entry));
  }
  return report;
}

BestResponse ComputeBestResponse(const Instance& inst, AgentId agent,
                                 const Profile& profile) {
  EquilibriumAnalyzer analyzer(inst);
  return analyzer.BestResponseOf(agent, profile);
}

EquilibriumReport ComputePneFactor(const Instance& inst,
                                   const Profile& profile) {
  EquilibriumAnalyzer analyzer(inst);
  return analyzer.Analyze(profile);
}

std::uint64_t ExhaustiveProfileCount(int num_agents, int num_goods) {
  const std::uint64_t per_agent = Factorial(num_goods);
  std::uint64_t total = 1;
  for (int i = 0; i < num_agents; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / per_agent) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= per_agent;
  }
  return total;
}

void ScanProfiles(const Instance& inst, const ScanOptions& options,
                  const std::function<void(const ScanRecord&)>& sink) {
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  std::uint64_t total = options.samples;
  if (options.exhaustive) {
    total = ExhaustiveProfileCount(n, m);
    if (total > kExhaustiveScanGuard) {
      throw SizeGuardExceeded(
          "exhaustive scan needs (m!)^n <= " +
          std::to_string(kExhaustiveScanGuard) + ", got n = " +
          std::to_string(n) + ", m = " + std::to_string(m));
    }
  }
  const int threads = std::max(1, options.threads);
  std::vector<EquilibriumAnalyzer> analyzers;
  for (int t = 0; t < threads; ++t) analyzers.emplace_back(inst);

  std::mt19937_64 rng(options.seed);
  std::vector<GoodId> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  auto next_profile = [&](std::uint64_t index) {
    if (options.exhaustive) return UnrankProfile(n, m, index);
    Profile p;
    for (int i = 0; i < n; ++i) {
      std::vector<GoodId> order = identity;
      std::shuffle(order.begin(), order.end(), rng);
      p.emplace_back(std::move(order));
    }
    return p;
  };

  const std::uint64_t batch = static_cast<std::uint64_t>(threads) * 256;
  std::vector<ScanRecord> records;
  for (std::uint64_t start = 0; start < total; start += batch) {
    const std::uint64_t count = std::min(batch, total - start);
    records.assign(count, ScanRecord{});
    for (std::uint64_t k = 0; k < count; ++k) {
      records[k].index = start + k;
      records[k].profile = next_profile(start + k);
    }
    auto work = [&](int t) {
      for (std::uint64_t k = t; k < count; k += threads) {
        ScanRecord& r = records[k];
        r.equilibrium = analyzers[t].Analyze(r.profile);
        r.fairness = ScoreFairness(inst, r.equilibrium.allocation);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (std::thread& th : pool) th.join();
    }
    for (const ScanRecord& r : records) sink(r);
  }
}

InstanceClasses CertifyInstance(const Instance& inst) {
  InstanceClasses c{true, true, true, true};
  for (const Valuation& v : inst.valuations()) {
    c.additive = c.additive && v.kind() == ValuationKind::kAdditive;
    c.submodular = c.submodular && CheckSubmodular(v).holds;
    c.cancelable = c.cancelable && CheckCancelable(v).holds;
    c.subadditive = c.subadditive && CheckSubadditive(v).holds;
  }
  return c;
}

std::pair<Rational, std::string> ApplicableBound(const InstanceClasses& classes,
                                                 int num_agents,
                                                 const Rational& alpha) {
  std::optional<std::pair<Rational, std::string>> best;
  auto consider = [&](Rational bound, std::string rule) {
    if (!best || bound > best->first) best.emplace(std::move(bound), rule);
  };
  if (num_agents >= 2) {
    if (num_agents == 2 && classes.additive) {
      consider(alpha / (Rational(2) - alpha), "additive, n = 2: alpha/(2-alpha)");
    }
    if (num_agents == 2 && classes.submodular) {
      consider(alpha / Rational(2), "submodular, n = 2: alpha/2");
    }
    if (classes.submodular) {
      consider(alpha / Rational(3), "submodular: alpha/3");
    }
    if (classes.subadditive && classes.cancelable) {
      consider(alpha / Rational(2), "subadditive and cancelable: alpha/2");
    }
  }
  if (!best) {
    throw InvalidArgument(
        "no EF1 guarantee applies: need n >= 2 and every valuation additive, "
        "submodular, or subadditive and cancelable");
  }
  return *best;
}

FairnessBoundCheck VerifyFairnessBound(EquilibriumAnalyzer& analyzer,
                                       const InstanceClasses& classes,
                                       const Profile& profile) {
  const Instance& inst = analyzer.instance();
  EquilibriumReport eq = analyzer.Analyze(profile);
  FairnessReport fair = ScoreFairness(inst, eq.allocation);
  auto [bound, rule] =
      ApplicableBound(classes, inst.num_agents(), eq.pne_factor);
  FairnessBoundCheck out{eq.pne_factor, fair.ef1_factor, bound, rule, false};
  out.holds = out.ef1.AtLeast(out.bound);
  return out;
}

FairnessBoundCheck VerifyFairnessBound(const Instance& inst,
                                       const Profile& profile) {
  EquilibriumAnalyzer analyzer(inst);
  return VerifyFairnessBound(analyzer, CertifyInstance(inst), profile);
}

}  // namespace rrfair
