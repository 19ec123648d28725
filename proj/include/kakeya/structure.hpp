#pragma once

#include <array>
#include <vector>

#include "kakeya/dir_tree.hpp"

namespace kakeya {

/// Per-vertex splitting numbers. split(leaf) = 0; a single child passes its
/// value through; two children a,b give max(split a, split b, 1 + min(a, b)).
struct SplitAnnotation {
  std::vector<std::vector<int>> by_level;  // aligned with DirTree::level(k)
  int tree_split = 0;

  int at(const DirTree& tree, const DyadicVertex& v) const;
};

SplitAnnotation split_numbers(const DirTree& tree);

/// Pruned subtree with generations G_0..G_N. Every ray of the pruned tree
/// meets each generation in exactly one vertex, and split(tree) = N.
struct PrunedTree {
  DirTree tree;  // depth = working depth h(P)
  int split = 0;
  std::vector<std::vector<DyadicVertex>> generations;

  std::uint32_t depth() const { return tree.depth(); }
};

PrunedTree prune(const DirTree& tree);

/// Recursive spine decomposition. The spine ray carries every vertex of
/// maximal split; off-spine subtrees decompose with strictly smaller order.
struct LacunaryDecomposition {
  int order = 0;
  DyadicVertex root;        // subtree root (absolute path)
  DyadicVertex spine_leaf;  // depth-h endpoint of the spine ray
  std::vector<LacunaryDecomposition> branches;
};

LacunaryDecomposition lacunary_order(const DirTree& tree);

/// Remark-style covering of an order-1 tree's leaf slopes by four sequences
/// converging to the spine slope: side of the spine x parity of the dyadic
/// distance scale, each sorted by decreasing dyadic distance.
std::array<std::vector<Rational>, 4> four_sequences(const LacunaryDecomposition& decomp,
                                                    const DirTree& tree);

}  // namespace kakeya
