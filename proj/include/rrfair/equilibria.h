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

#ifndef RRFAIR_EQUILIBRIA_H_
#define RRFAIR_EQUILIBRIA_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rrfair/fairness.h"
#include "rrfair/instance.h"
#include "rrfair/mechanism.h"
#include "rrfair/rational.h"

namespace rrfair {

// Largest good count the best-response search accepts.
inline constexpr int kBestResponseGuard = 14;
// Largest number of profiles an exhaustive scan may visit.
inline constexpr std::uint64_t kExhaustiveScanGuard = 1'000'000;

struct BestResponse {
  Ranking ranking;
  Bundle bundle;
  Rational value;
  std::uint64_t explored_states = 0;
};

struct AgentEquilibrium {
  Rational current_value;
  BestResponse best;
  // current / best; unbounded when the best value is zero.
  Factor ratio;
};

struct EquilibriumReport {
  std::vector<AgentEquilibrium> per_agent;
  // Minimum over agents of the ratio, unbounded ratios counting as 1.
  Rational pne_factor;
  Allocation allocation;
};

// Exact best responses and approximate-equilibrium factors for one
// instance. Caches each agent's set-function values, so reuse one analyzer
// across many profiles. Not thread-safe; use one per thread.
class EquilibriumAnalyzer {
 public:
  // Throws InvalidArgument when m is not a multiple of n and
  // SizeGuardExceeded when m exceeds kBestResponseGuard.
  explicit EquilibriumAnalyzer(Instance inst);

  const Instance& instance() const { return inst_; }

  // Maximizes v_i over every ranking of `agent` with the other rankings in
  // `profile` fixed. Searches the agent's pick sequences depth-first: each
  // sequence is realized by the ranking that lists it first, so the leaves
  // are exactly the reachable outcomes. Ties go to the lexicographically
  // least pick sequence. The agent's own entry in `profile` is ignored.
  BestResponse BestResponseOf(AgentId agent, const Profile& profile);

  EquilibriumReport Analyze(const Profile& profile);

  // v_i(S) through the cache.
  const Rational& ValueOf(AgentId agent, Bundle s);

 private:
  struct Continuation {
    Rational value;
    std::vector<GoodId> picks;
  };
  struct SearchState;
  const Continuation& Search(SearchState& state, Bundle available,
                             Bundle held);

  Instance inst_;
  std::vector<std::vector<Rational>> values_;
  std::vector<std::vector<bool>> known_;
};

BestResponse ComputeBestResponse(const Instance& inst, AgentId agent,
                                 const Profile& profile);
EquilibriumReport ComputePneFactor(const Instance& inst,
                                   const Profile& profile);

struct ScanOptions {
  bool exhaustive = true;
  std::uint64_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;     // sampled mode only
  int threads = 1;
};

struct ScanRecord {
  std::uint64_t index = 0;  // position in canonical scan order
  Profile profile;
  EquilibriumReport equilibrium;
  FairnessReport fairness;
};

// Number of profiles an exhaustive scan visits, (m!)^n, saturated at
// UINT64_MAX.
std::uint64_t ExhaustiveProfileCount(int num_agents, int num_goods);

// Evaluates every profile (exhaustive, in lexicographic order with agent 0
// most significant) or `samples` uniformly random profiles drawn from a
// generator seeded with `seed`. Records reach `sink` in canonical order
// regardless of thread count. Throws SizeGuardExceeded when an exhaustive
// scan would exceed kExhaustiveScanGuard profiles.
void ScanProfiles(const Instance& inst, const ScanOptions& options,
                  const std::function<void(const ScanRecord&)>& sink);

// Which certified classes every agent's valuation belongs to.
struct InstanceClasses {
  bool additive = false;
  bool submodular = false;
  bool cancelable = false;
  bool subadditive = false;
};

// Runs the exhaustive certificates for every agent.
InstanceClasses CertifyInstance(const Instance& inst);

struct FairnessBoundCheck {
  Rational alpha;   // pne factor of the profile
  Factor ef1;       // ef1 factor of its allocation
  Rational bound;   // strongest applicable guarantee at this alpha
  std::string rule; // which guarantee was applied
  bool holds = false;
};

// Strongest guarantee for the given classes and agent count:
//   n = 2 additive: alpha / (2 - alpha)
//   n = 2 submodular: alpha / 2
//   submodular: alpha / 3
//   subadditive and cancelable: alpha / 2
// Throws InvalidArgument when none applies.
std::pair<Rational, std::string> ApplicableBound(const InstanceClasses& classes,
                                                 int num_agents,
                                                 const Rational& alpha);

FairnessBoundCheck VerifyFairnessBound(EquilibriumAnalyzer& analyzer,
                                       const InstanceClasses& classes,
                                       const Profile& profile);
FairnessBoundCheck VerifyFairnessBound(const Instance& inst,
                                       const Profile& profile);

}  // namespace rrfair

#endif  // RRFAIR_EQUILIBRIA_H_
