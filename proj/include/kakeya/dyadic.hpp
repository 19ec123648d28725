#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "kakeya/rational.hpp"

namespace kakeya {

/// A vertex of the rooted binary tree. The root is the empty bit string;
/// child 0 / child 1 append a bit. A vertex at height h is identified with
/// the dyadic interval [path/2^h, (path+1)/2^h) in [0,1].
struct DyadicVertex {
  std::uint32_t height = 0;
  std::uint64_t path = 0;  // bits packed most-significant-first in the low `height` bits

  static constexpr std::uint32_t kMaxHeight = 62;

  static DyadicVertex root() { return {}; }
  static DyadicVertex from_bits(std::string_view bits);
  std::string bits() const;

  DyadicVertex child(int b) const;
  DyadicVertex parent() const;
  /// Ancestor at height k (k <= height); k == height returns *this.
  DyadicVertex ancestor_at(std::uint32_t k) const;
  /// Last bit on the path (the child index under the parent).
  int last_bit() const;

  /// *this ⊆ v: v's bit string is a prefix of ours.
  bool is_descendant_of(const DyadicVertex& v) const;

  friend bool operator==(const DyadicVertex&, const DyadicVertex&) = default;
  friend std::strong_ordering operator<=>(const DyadicVertex&, const DyadicVertex&) = default;
};

/// D(u,v): deepest vertex containing both (the longest common prefix).
DyadicVertex common_ancestor(const DyadicVertex& u, const DyadicVertex& v);

/// Left endpoint of I_v: path / 2^height.
Rational leaf_slope(const DyadicVertex& v);

/// |I_v| = 2^-height.
Rational interval_length(const DyadicVertex& v);

}  // namespace kakeya
