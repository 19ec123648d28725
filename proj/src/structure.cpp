#include "kakeya/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace kakeya {

int SplitAnnotation::at(const DirTree& tree, const DyadicVertex& v) const {
  auto idx = tree.level_index(v);
  if (idx < 0) throw std::invalid_argument("vertex not in tree");
  return by_level[v.height][static_cast<std::size_t>(idx)];
}

SplitAnnotation split_numbers(const DirTree& tree) {
  SplitAnnotation ann;
  std::uint32_t h = tree.depth();
  ann.by_level.resize(h + 1);
  ann.by_level[h].assign(tree.level(h).size(), 0);
  for (std::uint32_t k = h; k > 0; --k) {
    const auto& up = tree.level(k - 1);
    const auto& down = tree.level(k);
    auto& vals = ann.by_level[k - 1];
    vals.resize(up.size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < up.size(); ++i) {
      int s0 = -1, s1 = -1;
      while (c < down.size() && (down[c] >> 1) == up[i]) {
        (down[c] & 1 ? s1 : s0) = ann.by_level[k][c];
        ++c;
      }
      if (s0 >= 0 && s1 >= 0)
        vals[i] = std::max({s0, s1, 1 + std::min(s0, s1)});
      else
        vals[i] = std::max(s0, s1);
    }
  }
  ann.tree_split = ann.by_level[0][0];
  return ann;
}

namespace {

/// Minimal-height descendant of v (inclusive) whose two children both have
/// split >= s - 1. Requires split(v) >= s >= 1; the descent is forced.
DyadicVertex find_witness(const DirTree& tree, const SplitAnnotation& ann, DyadicVertex v, int s) {
  while (true) {
    int mask = tree.child_mask(v);
    if (mask == 3) {
      int s0 = ann.at(tree, v.child(0));
      int s1 = ann.at(tree, v.child(1));
      if (s0 >= s - 1 && s1 >= s - 1) return v;
      v = v.child(s0 >= s ? 0 : 1);
    } else {
      v = v.child(mask == 1 ? 0 : 1);
    }
  }
}

/// Extend v to the given height along the lexicographically smallest path.
DyadicVertex extend_min(const DirTree& tree, DyadicVertex v, std::uint32_t height) {
  while (v.height < height) {
    int mask = tree.child_mask(v);
    v = v.child(mask & 1 ? 0 : 1);
  }
  return v;
}

}  // namespace

PrunedTree prune(const DirTree& tree) {
  SplitAnnotation ann = split_numbers(tree);
  int n = ann.tree_split;

  PrunedTree out;
  out.split = n;
  out.generations.push_back({DyadicVertex::root()});
  if (n == 0) {
    // split 0 means the tree is a single ray; keep it whole
    out.tree = tree;
    return out;
  }

  std::uint32_t max_witness_height = 0;
  std::vector<std::vector<DyadicVertex>> witness_by_gen;  // per generation j < n
  for (int j = 0; j < n; ++j) {
    int s = n - j;
    std::vector<DyadicVertex> witnesses;
    std::vector<DyadicVertex> next;
    for (const DyadicVertex& g : out.generations[static_cast<std::size_t>(j)]) {
      DyadicVertex w = find_witness(tree, ann, g, s);
      max_witness_height = std::max(max_witness_height, w.height);
      witnesses.push_back(w);
      for (int b = 0; b < 2; ++b) {
        DyadicVertex c = w.child(b);
        next.push_back(s - 1 >= 1 ? find_witness(tree, ann, c, s - 1) : c);
      }
    }
    witness_by_gen.push_back(std::move(witnesses));
    out.generations.push_back(std::move(next));
  }

  std::uint32_t hp = max_witness_height + 1;
  std::vector<std::uint64_t> leaves;
  leaves.reserve(out.generations.back().size());
  for (const DyadicVertex& g : out.generations.back())
    leaves.push_back(extend_min(tree, g, hp).path);
  out.tree = DirTree::from_leaves(hp, std::move(leaves));
  return out;
}

namespace {

LacunaryDecomposition decompose(const DirTree& tree, const SplitAnnotation& ann,
                                const DyadicVertex& root) {
  LacunaryDecomposition d;
  d.root = root;
  d.order = ann.at(tree, root);
  DyadicVertex v = root;
  while (v.height < tree.depth()) {
    auto kids = tree.children(v);
    DyadicVertex next = kids[0];
    if (kids.size() == 2) {
      // at most one child attains the maximal split; prefer it, else go left
      if (ann.at(tree, kids[1]) == d.order && ann.at(tree, kids[0]) < d.order) next = kids[1];
      const DyadicVertex& off = next == kids[0] ? kids[1] : kids[0];
      d.branches.push_back(decompose(tree, ann, off));
    }
    v = next;
  }
  d.spine_leaf = v;
  return d;
}

}  // namespace

LacunaryDecomposition lacunary_order(const DirTree& tree) {
  SplitAnnotation ann = split_numbers(tree);
  return decompose(tree, ann, DyadicVertex::root());
}

std::array<std::vector<Rational>, 4> four_sequences(const LacunaryDecomposition& decomp,
                                                    const DirTree& tree) {
  if (decomp.order > 1) throw std::invalid_argument("four_sequences needs a decomposition of order <= 1");
  std::array<std::vector<Rational>, 4> lists;
  Rational s = leaf_slope(decomp.spine_leaf);

  struct Entry {
    std::uint32_t scale;
    Rational slope;
  };
  std::vector<Entry> entries;
  for (const auto& b : decomp.branches) {
    if (b.order != 0) throw std::invalid_argument("order-1 decomposition has a branch of order > 0");
    entries.push_back({b.root.height - 1, leaf_slope(b.spine_leaf)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.scale < b.scale; });
  for (const auto& e : entries) {
    int side = e.slope > s ? 0 : 2;
    lists[static_cast<std::size_t>(side + (e.scale % 2))].push_back(e.slope);
  }
  (void)tree;
  return lists;
}

}  // namespace kakeya
