#include "kakeya/dyadic.hpp"

#include <bit>
#include <stdexcept>

namespace kakeya {

DyadicVertex DyadicVertex::from_bits(std::string_view bits) {
  if (bits.size() > kMaxHeight) throw std::invalid_argument("vertex bit string too long");
  DyadicVertex v;
  v.height = static_cast<std::uint32_t>(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("vertex bit string must be binary");
    v.path = (v.path << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::string DyadicVertex::bits() const {
  std::string s(height, '0');
  for (std::uint32_t i = 0; i < height; ++i)
    if (path >> (height - 1 - i) & 1) s[i] = '1';
  return s;
}

DyadicVertex DyadicVertex::child(int b) const {
  if (height >= kMaxHeight) throw std::invalid_argument("vertex too deep for a child");
  return {height + 1, path << 1 | static_cast<std::uint64_t>(b & 1)};
}

DyadicVertex DyadicVertex::parent() const {
  if (height == 0) throw std::invalid_argument("the origin has no parent");
  return {height - 1, path >> 1};
}

DyadicVertex DyadicVertex::ancestor_at(std::uint32_t k) const {
  if (k > height) throw std::invalid_argument("ancestor height above the vertex");
  return {k, path >> (height - k)};
}

int DyadicVertex::last_bit() const {
  if (height == 0) throw std::invalid_argument("the origin has no last bit");
  return static_cast<int>(path & 1);
}

bool DyadicVertex::is_descendant_of(const DyadicVertex& v) const {
  return height >= v.height && (path >> (height - v.height)) == v.path;
}

DyadicVertex common_ancestor(const DyadicVertex& u, const DyadicVertex& v) {
  std::uint32_t k = std::min(u.height, v.height);
  std::uint64_t a = u.path >> (u.height - k);
  std::uint64_t b = v.path >> (v.height - k);
  std::uint64_t diff = a ^ b;
  std::uint32_t drop = diff == 0 ? 0 : static_cast<std::uint32_t>(std::bit_width(diff));
  return {k - drop, a >> drop};
}

Rational leaf_slope(const DyadicVertex& v) {
  return Rational(BigInt(v.path), BigInt(1) << v.height);
}

Rational interval_length(const DyadicVertex& v) {
  return Rational(BigInt(1), BigInt(1) << v.height);
}

}  // namespace kakeya
