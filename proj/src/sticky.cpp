#include "kakeya/sticky.hpp"

#include <stdexcept>

#include "kakeya/rng.hpp"

namespace kakeya {

namespace {

std::uint64_t vertex_key(const DyadicVertex& v) {
  return (std::uint64_t{1} << v.height) | v.path;
}

}  // namespace

StickyMap::StickyMap(std::shared_ptr<const PrunedTree> target, std::vector<std::uint64_t> leaf_image)
    : target_(std::move(target)), leaf_image_(std::move(leaf_image)) {
  if (!target_) throw std::invalid_argument("sticky map needs a target");
  std::uint32_t h = target_->depth();
  if (leaf_image_.size() != (std::size_t{1} << h))
    throw std::invalid_argument("sticky map needs one image per base leaf");
  for (std::uint64_t img : leaf_image_)
    if (!target_->tree.contains({h, img}))
      throw std::invalid_argument("leaf image not a leaf of the target");
  // prefix consistency: sibling blocks must agree one level up
  std::vector<std::uint64_t> cur = leaf_image_;
  for (std::uint32_t k = h; k > 0; --k) {
    std::vector<std::uint64_t> up(cur.size() / 2);
    for (std::size_t i = 0; i < up.size(); ++i) {
      if ((cur[2 * i] >> 1) != (cur[2 * i + 1] >> 1))
        throw std::invalid_argument("leaf images are not sticky-consistent");
      up[i] = cur[2 * i] >> 1;
    }
    cur = std::move(up);
  }
}

DyadicVertex StickyMap::image(const DyadicVertex& u) const {
  std::uint32_t h = depth();
  if (u.height > h) throw std::invalid_argument("vertex below the base depth");
  std::uint64_t leaf = u.path << (h - u.height);
  return {u.height, leaf_image_[leaf] >> (h - u.height)};
}

StickyMap sample_sticky_with_bits(std::shared_ptr<const PrunedTree> target, const BitSource& bit) {
  const PrunedTree& p = *target;
  std::uint32_t h = p.depth();
  std::vector<std::uint64_t> images(std::size_t{1} << h);

  struct Frame {
    DyadicVertex base, image;
  };
  std::vector<Frame> stack{{DyadicVertex::root(), DyadicVertex::root()}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.base.height == h) {
      images[f.base.path] = f.image.path;
      continue;
    }
    int mask = p.tree.child_mask(f.image);
    for (int b = 1; b >= 0; --b) {
      DyadicVertex c = f.base.child(b);
      DyadicVertex q = mask == 3 ? f.image.child(bit(c)) : f.image.child(mask == 1 ? 0 : 1);
      stack.push_back({c, q});
    }
  }
  return StickyMap(std::move(target), std::move(images));
}

StickyMap sample_sticky(std::shared_ptr<const PrunedTree> target, std::uint64_t seed) {
  return sample_sticky_with_bits(
      std::move(target), [seed](const DyadicVertex& c) { return rng_coin(seed, vertex_key(c)); });
}

bool is_sticky(const RawAssignment& a, const PrunedTree& target) {
  std::uint32_t h = target.depth();
  if (a.by_height.size() != h + 1) return false;
  for (std::uint32_t k = 0; k <= h; ++k) {
    const auto& row = a.by_height[k];
    if (row.size() != (std::size_t{1} << k)) return false;
    for (std::uint64_t img : row)
      if (!target.tree.contains({k, img})) return false;
  }
  if (a.by_height[0][0] != 0) return false;
  // parent-child pairs suffice for ancestry preservation
  for (std::uint32_t k = 1; k <= h; ++k)
    for (std::size_t p = 0; p < a.by_height[k].size(); ++p)
      if ((a.by_height[k][p] >> 1) != a.by_height[k - 1][p >> 1]) return false;
  return true;
}

RawAssignment to_raw(const StickyMap& sigma) {
  std::uint32_t h = sigma.depth();
  RawAssignment a;
  a.by_height.resize(h + 1);
  for (std::uint32_t k = 0; k <= h; ++k) {
    a.by_height[k].resize(std::size_t{1} << k);
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << k); ++p)
      a.by_height[k][p] = sigma.image({k, p}).path;
  }
  return a;
}

std::vector<Rational> mass_identity(const StickyMap& sigma) {
  const PrunedTree& target = sigma.target();
  std::uint32_t h = sigma.depth();
  if (target.generations.empty()) throw std::invalid_argument("target has no generations");
  std::vector<Rational> sums;
  sums.reserve(target.generations.size());
  for (const auto& gen : target.generations) {
    Rational total = 0;
    for (const DyadicVertex& v : gen) {
      std::uint64_t count = 0;
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << v.height); ++u) {
        std::uint64_t img = sigma.leaf_images()[u << (h - v.height)] >> (h - v.height);
        if (img == v.path) ++count;
      }
      total += Rational(BigInt(count), BigInt(1) << v.height);
    }
    sums.push_back(total);
  }
  return sums;
}

}  // namespace kakeya
