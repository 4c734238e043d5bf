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

#include "rrfair/certificates.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rrfair/errors.h"

namespace rrfair {

namespace {

using Mask = std::uint64_t;

inline constexpr int kSetBoundGuard = 12;

Mask Bit(int g) { return Mask{1} << g; }

std::vector<Rational> Guarded(const Valuation& v, int guard,
                              const char* check) {
  if (v.num_goods() > guard) {
    throw SizeGuardExceeded(std::string(check) + " check over " +
                            std::to_string(v.num_goods()) +
                            " goods exceeds the limit of " +
                            std::to_string(guard));
  }
  return Tabulate(v, guard);
}

Certificate Fail(Mask s, Mask t, GoodId g) {
  return Certificate{false, Witness{Bundle(s), Bundle(t), g}};
}

// Calls fn(t) for every superset t of s within `full`, in ascending order;
// stops early when fn returns true.
template <typename Fn>
bool AnySuperset(Mask s, Mask full, Fn&& fn) {
  const Mask free = full & ~s;
  Mask sub = 0;
  while (true) {
    if (fn(s | sub)) return true;
    if (sub == free) return false;
    sub = (sub - free) & free;
  }
}

}  // namespace

Certificate CheckMonotone(const Valuation& v) {
  const auto table = Guarded(v, kMonotoneGuard, "monotonicity");
  const int m = v.num_goods();
  for (Mask s = 0; s < table.size(); ++s) {
    for (int g = 0; g < m; ++g) {
      if ((s & Bit(g)) == 0 && table[s | Bit(g)] < table[s]) {
        return Fail(s, s | Bit(g), g);
      }
    }
  }
  return {};
}

Certificate CheckSubmodular(const Valuation& v) {
  const auto table = Guarded(v, kSubmodularGuard, "submodularity");
  const int m = v.num_goods();
  const Mask full = Bundle::Full(m).mask();

  // Diminishing returns holds globally iff it holds for every single-good
  // extension: v(S+g) + v(S+h) >= v(S+g+h) + v(S).
  bool local_ok = true;
  for (Mask s = 0; s < table.size() && local_ok; ++s) {
    for (int g = 0; g < m && local_ok; ++g) {
      if (s & Bit(g)) continue;
      for (int h = g + 1; h < m; ++h) {
        if (s & Bit(h)) continue;
        if (table[s | Bit(g)] + table[s | Bit(h)] <
            table[s | Bit(g) | Bit(h)] + table[s]) {
          local_ok = false;
          break;
        }
      }
    }
  }
  if (local_ok) return {};

  // Lexicographically first witness over (S, T, g).
  for (Mask s = 0; s < table.size(); ++s) {
    Certificate found;
    if (AnySuperset(s, full, [&](Mask t) {
          for (int g = 0; g < m; ++g) {
            if (t & Bit(g)) continue;
            if (table[s | Bit(g)] - table[s] < table[t | Bit(g)] - table[t]) {
              found = Fail(s, t, g);
              return true;
            }
          }
          return false;
        })) {
      return found;
    }
  }
  return {};  // unreachable when the local check failed
}

Certificate CheckSubmodularBySetBound(const Valuation& v) {
  const auto table = Guarded(v, kSetBoundGuard, "set-bound submodularity");
  const int m = v.num_goods();
  for (Mask s = 0; s < table.size(); ++s) {
    for (Mask t = 0; t < table.size(); ++t) {
      Rational bound = table[s];
      for (int g = 0; g < m; ++g) {
        if ((t & Bit(g)) && !(s & Bit(g))) {
          bound += table[s | Bit(g)] - table[s];
        }
      }
      if (table[t] > bound) return Fail(s, t, -1);
    }
  }
  return {};
}

Certificate CheckCancelable(const Valuation& v) {
  const auto table = Guarded(v, kCancelableGuard, "cancelability");
  const int m = v.num_goods();
  const Mask full = Bundle::Full(m).mask();

  // For each g, v(S) <= v(T) must imply v(S+g) <= v(T+g) over subsets of
  // M\{g}: sorted by v(S), the values v(S+g) are non-decreasing and
  // constant on ties.
  bool ok = true;
  for (int g = 0; g < m && ok; ++g) {
    std::vector<Mask> subsets;
    subsets.reserve(std::size_t{1} << (m - 1));
    AnySuperset(0, full & ~Bit(g), [&](Mask s) {
      subsets.push_back(s);
      return false;
    });
    std::sort(subsets.begin(), subsets.end(), [&](Mask a, Mask b) {
      if (table[a] != table[b]) return table[a] < table[b];
      return table[a | Bit(g)] < table[b | Bit(g)];
    });
    for (std::size_t k = 1; k < subsets.size(); ++k) {
      const Mask a = subsets[k - 1], b = subsets[k];
      const Rational& ea = table[a | Bit(g)];
      const Rational& eb = table[b | Bit(g)];
      if (ea > eb || (table[a] == table[b] && ea != eb)) {
        ok = false;
        break;
      }
    }
  }
  if (ok) return {};

  for (Mask s = 0; s < table.size(); ++s) {
    for (Mask t = 0; t < table.size(); ++t) {
      for (int g = 0; g < m; ++g) {
        if ((s | t) & Bit(g)) continue;
        if (table[s | Bit(g)] > table[t | Bit(g)] && !(table[s] > table[t])) {
          return Fail(s, t, g);
        }
      }
    }
  }
  return {};
}

Certificate CheckSubadditive(const Valuation& v) {
  const auto table = Guarded(v, kSubadditiveGuard, "subadditivity");
  const int m = v.num_goods();
  const Mask full = Bundle::Full(m).mask();

  // For a monotone function, disjoint pairs decide the property:
  // v(S u T) = v(S u (T\S)) <= v(S) + v(T\S) <= v(S) + v(T).
  bool ok = true;
  for (Mask s = 0; s < table.size() && ok; ++s) {
    const Mask free = full & ~s;
    for (Mask t = free;; t = (t - 1) & free) {
      if (table[s | t] > table[s] + table[t]) {
        ok = false;
        break;
      }
      if (t == 0) break;
    }
  }
  if (ok) return {};

  for (Mask s = 0; s < table.size(); ++s) {
    for (Mask t = 0; t < table.size(); ++t) {
      if (table[s | t] > table[s] + table[t]) return Fail(s, t, -1);
    }
  }
  return {};
}

std::string FormatWitness(const Witness& w) {
  std::string out = "S=" + FormatBundle(w.s) + " T=" + FormatBundle(w.t);
  if (w.good >= 0) out += " g=" + GoodName(w.good);
  return out;
}

}  // namespace rrfair
