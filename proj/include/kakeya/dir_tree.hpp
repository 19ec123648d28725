#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kakeya/dyadic.hpp"

namespace kakeya {

/// Rooted subtree of the binary tree truncated at a fixed depth. Stored by
/// level as sorted vertex paths. Connectedness and the no-dead-end property
/// hold by construction: every level is the set of prefixes of the leaf set.
class DirTree {
 public:
  DirTree() = default;
  static DirTree from_leaves(std::uint32_t depth, std::vector<std::uint64_t> leaves);
  static DirTree from_leaf_strings(std::uint32_t depth, const std::vector<std::string>& leaves);

  std::uint32_t depth() const { return depth_; }
  const std::vector<std::uint64_t>& level(std::uint32_t k) const;
  const std::vector<std::uint64_t>& leaves() const { return levels_.back(); }
  std::size_t leaf_count() const { return levels_.back().size(); }
  std::size_t vertex_count() const;

  bool contains(const DyadicVertex& v) const;
  /// Bit 0 set = left child retained, bit 1 = right. Throws if v is not in
  /// the tree; returns 0 for leaves.
  int child_mask(const DyadicVertex& v) const;
  bool splits(const DyadicVertex& v) const { return child_mask(v) == 3; }

  std::vector<DyadicVertex> children(const DyadicVertex& v) const;
  std::vector<DyadicVertex> shadow_leaves(const DyadicVertex& v) const;

  /// Index of v.path within level(v.height); -1 if absent.
  std::ptrdiff_t level_index(const DyadicVertex& v) const;

  bool operator==(const DirTree&) const = default;

 private:
  std::uint32_t depth_ = 0;
  std::vector<std::vector<std::uint64_t>> levels_;  // levels_[k]: sorted paths at height k
};

struct GeneratorSpec {
  enum class Kind { full, single_ray, explicit_leaves, lacunary_chain, cantor_pattern };
  Kind kind = Kind::full;
  std::uint32_t depth = 0;
  std::vector<std::string> leaves;            // explicit_leaves
  std::string ray;                            // single_ray
  std::vector<std::uint32_t> branch_heights;  // lacunary_chain
  std::uint32_t chain_order = 1;              // lacunary_chain: nesting order of off-spine chains
  std::vector<std::string> pattern;           // cantor_pattern tokens, cycled over heights

  static GeneratorSpec full(std::uint32_t depth);
  static GeneratorSpec single_ray(std::string ray);
  static GeneratorSpec explicit_leaves(std::uint32_t depth, std::vector<std::string> leaves);
  static GeneratorSpec lacunary_chain(std::uint32_t depth, std::vector<std::uint32_t> branch_heights,
                                      std::uint32_t order = 1);
  static GeneratorSpec cantor_pattern(std::uint32_t depth, std::vector<std::string> pattern);
};

DirTree build_tree(const GeneratorSpec& spec);

}  // namespace kakeya
