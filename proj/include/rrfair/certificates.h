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

// Exhaustive class-membership checks for set functions. Every check
// enumerates subsets, so each one has a hard good-count guard and throws
// SizeGuardExceeded beyond it. Witnesses are the lexicographically first
// violation: smallest S mask, then T mask, then good g.

#ifndef RRFAIR_CERTIFICATES_H_
#define RRFAIR_CERTIFICATES_H_

#include <optional>
#include <string>

#include "rrfair/bundle.h"
#include "rrfair/valuation.h"

namespace rrfair {

inline constexpr int kMonotoneGuard = 20;
inline constexpr int kSubmodularGuard = 20;
inline constexpr int kCancelableGuard = 16;
inline constexpr int kSubadditiveGuard = 16;

struct Witness {
  Bundle s;
  Bundle t;
  GoodId good = -1;  // -1 when the property involves no single good.

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Certificate {
  bool holds = true;
  std::optional<Witness> witness;  // Set iff !holds.

  explicit operator bool() const { return holds; }
};

// marginal(v, g, S) >= 0 for all S and g not in S. Witness: (S, S+g, g).
Certificate CheckMonotone(const Valuation& v);

// marginal(v, g, S) >= marginal(v, g, T) for all S subset of T, g not in T.
Certificate CheckSubmodular(const Valuation& v);

// The set-bound characterization of submodularity:
// v(T) <= v(S) + sum over t in T\S of marginal(v, t, S), for all S, T.
// Independent of CheckSubmodular; the two must agree on monotone inputs.
Certificate CheckSubmodularBySetBound(const Valuation& v);

// v(S+g) > v(T+g) implies v(S) > v(T), for all S, T and g outside both.
Certificate CheckCancelable(const Valuation& v);

// v(S u T) <= v(S) + v(T) for all S, T.
Certificate CheckSubadditive(const Valuation& v);

std::string FormatWitness(const Witness& w);

}  // namespace rrfair

#endif  // RRFAIR_CERTIFICATES_H_
