#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kakeya/sticky.hpp"

namespace kakeya {

/// Rooted subtree of the height-N binary tree. Bernoulli(1/2) edge
/// percolation from the root to level N; a depth-k edge carries a 2^k
/// resistor for the electrical-network view.
class PercTree {
 public:
  struct Node {
    std::int32_t child[2] = {-1, -1};
    std::int32_t depth = 0;
  };

  PercTree(int height, std::vector<Node> nodes);

  static PercTree full(int n);
  static PercTree single_ray(int n);
  /// Random subtree of the full height-n tree grown from the root: each
  /// potential child is kept independently with probability `keep`, and one
  /// surviving root-to-level-n ray is forced so the tree reaches the bottom.
  static PercTree random_subtree(int n, std::uint64_t seed, double keep = 0.6);

  int height() const { return height_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return node_count() - 1; }
  const Node& node(int i) const { return nodes_[i]; }

 private:
  int height_ = 0;
  std::vector<Node> nodes_;  // nodes_[0] = root at depth 0
};

/// Survival probability of Bernoulli(1/2) percolation root -> level N.
Rational survival_exact(const PercTree& tree);

/// Effective resistance; empty optional when no ray reaches level N.
std::optional<Rational> resistance(const PercTree& tree);

struct McEstimate {
  double value = 0;
  double stderr_ = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

McEstimate survival_mc(const PercTree& tree, std::int64_t trials, std::uint64_t seed);

struct LyonsCheck {
  Rational p;
  std::optional<Rational> r;
  Rational bound;  // 12 / (2 + R); 0 when R is infinite
  bool pass = false;
};

LyonsCheck lyons_check(const PercTree& tree);

/// Possible set of a point (x, y), x in (1,2]: for each base cell t at most
/// one target leaf slope s with y - t - x s in [0, 2^-h), plus the tree of
/// requirements those slopes impose on a random sticky map. Nodes pair a
/// base vertex with its required image; a node whose image splits consumes
/// one fair bit per outgoing base edge. Two requirements under one base
/// vertex are mutually exclusive alternatives.
struct ChoosingTree {
  Rational x, y;
  std::uint32_t depth = 0;  // base depth h

  struct Requirement {
    std::uint64_t base = 0;   // leaf path
    std::uint64_t image = 0;  // required target leaf path
  };
  std::vector<Requirement> possible;

  struct RNode {
    std::uint64_t base = 0, image = 0;
    std::uint32_t height = 0;
    bool image_splits = false;
    std::array<std::vector<std::int32_t>, 2> kids;  // per base-child branch
  };
  std::vector<RNode> nodes;  // nodes[0] = root when possible is nonempty

  bool consistent = true;   // at most one required image per base vertex
  int choosing_height = 0;  // bits along the deepest possible path

  /// Plain percolation tree (one node per consumed bit); defined when the
  /// requirements are consistent and all possible leaves sit at the same
  /// bit depth.
  std::optional<PercTree> percolation_tree() const;
};

ChoosingTree possible_set(const PrunedTree& target, const Rational& x, const Rational& y);

/// Exact coverage probability over random sticky maps, by the conditional
/// recursion on the requirement tree.
Rational cover_probability_exact(const PrunedTree& target, const Rational& x, const Rational& y);
Rational cover_probability_exact(const ChoosingTree& choosing, const PrunedTree& target);

/// Monte Carlo: sample sticky maps, count membership of (x,y) in K_sigma.
McEstimate cover_probability_mc(const std::shared_ptr<const PrunedTree>& target, const Rational& x,
                                const Rational& y, std::int64_t trials, std::uint64_t seed);

}  // namespace kakeya
