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

#ifndef RRFAIR_BUNDLE_H_
#define RRFAIR_BUNDLE_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rrfair {

// Goods are dense indices 0..m-1. Ascending index is the universal
// tie-breaking order.
using GoodId = int;
using AgentId = int;

inline constexpr int kMaxGoods = 64;

// A set of goods, stored as a bitmask (bit t = good t).
class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint64_t mask) : mask_(mask) {}
  Bundle(std::initializer_list<GoodId> goods) {
    for (GoodId g : goods) mask_ |= Bit(g);
  }
  static Bundle FromGoods(const std::vector<GoodId>& goods) {
    Bundle b;
    for (GoodId g : goods) b.mask_ |= Bit(g);
    return b;
  }
  // All goods 0..m-1.
  static constexpr Bundle Full(int m) {
    return Bundle(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool Contains(GoodId g) const { return (mask_ & Bit(g)) != 0; }
  constexpr bool IsSubsetOf(Bundle o) const { return (mask_ & ~o.mask_) == 0; }
  // Highest good index + 1, or 0 when empty.
  constexpr int Span() const { return 64 - std::countl_zero(mask_); }

  constexpr Bundle With(GoodId g) const { return Bundle(mask_ | Bit(g)); }
  constexpr Bundle Without(GoodId g) const { return Bundle(mask_ & ~Bit(g)); }

  constexpr Bundle operator|(Bundle o) const { return Bundle(mask_ | o.mask_); }
  constexpr Bundle operator&(Bundle o) const { return Bundle(mask_ & o.mask_); }
  // Set difference.
  constexpr Bundle operator-(Bundle o) const {
    return Bundle(mask_ & ~o.mask_);
  }

  // Goods in ascending order.
  std::vector<GoodId> Goods() const {
    std::vector<GoodId> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  // Visits goods in ascending order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) fn(std::countr_zero(m));
  }

  friend constexpr bool operator==(Bundle, Bundle) = default;
  friend constexpr auto operator<=>(Bundle a, Bundle b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  static constexpr std::uint64_t Bit(GoodId g) {
    return std::uint64_t{1} << g;
  }
  std::uint64_t mask_ = 0;
};

// 1-based display name used by every human-facing output: good 0 is "g1".
inline std::string GoodName(GoodId g) { return "g" + std::to_string(g + 1); }

// "{g1,g3,g5}"
std::string FormatBundle(Bundle b);
// "g1>g2>g3"
std::string FormatSequence(const std::vector<GoodId>& goods);

}  // namespace rrfair

#endif  // RRFAIR_BUNDLE_H_
