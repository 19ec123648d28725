#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "kakeya/structure.hpp"

namespace kakeya {

/// Height- and ancestry-preserving map from the depth-h full binary tree
/// into a pruned tree, h = target depth. Determined by its leaf images:
/// sigma(u) is the height-h(u) prefix of the image of any leaf below u.
class StickyMap {
 public:
  StickyMap(std::shared_ptr<const PrunedTree> target, std::vector<std::uint64_t> leaf_image);

  const PrunedTree& target() const { return *target_; }
  const std::shared_ptr<const PrunedTree>& target_ptr() const { return target_; }
  std::uint32_t depth() const { return target_->depth(); }
  const std::vector<std::uint64_t>& leaf_images() const { return leaf_image_; }

  DyadicVertex image(const DyadicVertex& u) const;

 private:
  std::shared_ptr<const PrunedTree> target_;
  std::vector<std::uint64_t> leaf_image_;  // indexed by base leaf path
};

/// One fair bit per base edge whose parent image splits; the argument is the
/// base child vertex the edge leads to.
using BitSource = std::function<int(const DyadicVertex& child)>;

StickyMap sample_sticky(std::shared_ptr<const PrunedTree> target, std::uint64_t seed);
StickyMap sample_sticky_with_bits(std::shared_ptr<const PrunedTree> target, const BitSource& bit);

/// Full per-height assignment, not necessarily sticky; lets the checker see
/// invalid candidates. by_height[k][p] = image path of the height-k vertex p.
struct RawAssignment {
  std::vector<std::vector<std::uint64_t>> by_height;
};

bool is_sticky(const RawAssignment& a, const PrunedTree& target);
RawAssignment to_raw(const StickyMap& sigma);

/// For each generation G_k: sum over v in G_k of |sigma^-1(v)| * 2^-h(v),
/// the preimages taken at height h(v) (maximal, hence disjoint intervals).
/// Contract: every entry equals 1 exactly.
std::vector<Rational> mass_identity(const StickyMap& sigma);

}  // namespace kakeya
