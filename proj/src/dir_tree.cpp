#include "kakeya/dir_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace kakeya {

namespace {

constexpr std::uint32_t kMaxDepth = 24;

void check_depth(std::uint32_t depth) {
  if (depth > kMaxDepth) throw std::invalid_argument("tree depth exceeds supported limit");
}

}  // namespace

DirTree DirTree::from_leaves(std::uint32_t depth, std::vector<std::uint64_t> leaves) {
  check_depth(depth);
  if (leaves.empty()) throw std::invalid_argument("leaf set must be nonempty");
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  if (leaves.back() >> depth) throw std::invalid_argument("leaf path out of range for depth");

  DirTree t;
  t.depth_ = depth;
  t.levels_.resize(depth + 1);
  t.levels_[depth] = std::move(leaves);
  for (std::uint32_t k = depth; k > 0; --k) {
    auto& up = t.levels_[k - 1];
    up.reserve(t.levels_[k].size());
    for (std::uint64_t p : t.levels_[k]) {
      std::uint64_t q = p >> 1;
      if (up.empty() || up.back() != q) up.push_back(q);
    }
  }
  return t;
}

DirTree DirTree::from_leaf_strings(std::uint32_t depth, const std::vector<std::string>& leaves) {
  std::vector<std::uint64_t> paths;
  paths.reserve(leaves.size());
  for (const auto& s : leaves) {
    if (s.size() != depth) throw std::invalid_argument("leaf string length must equal depth");
    paths.push_back(DyadicVertex::from_bits(s).path);
  }
  return from_leaves(depth, std::move(paths));
}

const std::vector<std::uint64_t>& DirTree::level(std::uint32_t k) const {
  if (k >= levels_.size()) throw std::invalid_argument("level beyond tree depth");
  return levels_[k];
}

std::size_t DirTree::vertex_count() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

std::ptrdiff_t DirTree::level_index(const DyadicVertex& v) const {
  if (v.height >= levels_.size()) return -1;
  const auto& l = levels_[v.height];
  auto it = std::lower_bound(l.begin(), l.end(), v.path);
  if (it == l.end() || *it != v.path) return -1;
  return it - l.begin();
}

bool DirTree::contains(const DyadicVertex& v) const { return level_index(v) >= 0; }

int DirTree::child_mask(const DyadicVertex& v) const {
  if (!contains(v)) throw std::invalid_argument("vertex not in tree");
  if (v.height == depth_) return 0;
  int mask = 0;
  const auto& l = levels_[v.height + 1];
  auto it = std::lower_bound(l.begin(), l.end(), v.path << 1);
  if (it != l.end() && *it == (v.path << 1)) mask |= 1;
  if (it != l.end()) {
    if (*it == ((v.path << 1) | 1)) mask |= 2;
    else if (std::next(it) != l.end() && *std::next(it) == ((v.path << 1) | 1)) mask |= 2;
  }
  return mask;
}

std::vector<DyadicVertex> DirTree::children(const DyadicVertex& v) const {
  int mask = child_mask(v);
  if (v.height >= depth_) throw std::invalid_argument("vertex at leaf level has no children");
  std::vector<DyadicVertex> out;
  if (mask & 1) out.push_back(v.child(0));
  if (mask & 2) out.push_back(v.child(1));
  return out;
}

std::vector<DyadicVertex> DirTree::shadow_leaves(const DyadicVertex& v) const {
  if (!contains(v)) throw std::invalid_argument("vertex not in tree");
  std::uint32_t shift = depth_ - v.height;
  const auto& l = levels_[depth_];
  auto lo = std::lower_bound(l.begin(), l.end(), v.path << shift);
  auto hi = std::lower_bound(l.begin(), l.end(), (v.path + 1) << shift);
  std::vector<DyadicVertex> out;
  out.reserve(hi - lo);
  for (auto it = lo; it != hi; ++it) out.push_back({depth_, *it});
  return out;
}

GeneratorSpec GeneratorSpec::full(std::uint32_t depth) {
  GeneratorSpec s;
  s.kind = Kind::full;
  s.depth = depth;
  return s;
}

GeneratorSpec GeneratorSpec::single_ray(std::string ray) {
  GeneratorSpec s;
  s.kind = Kind::single_ray;
  s.depth = static_cast<std::uint32_t>(ray.size());
  s.ray = std::move(ray);
  return s;
}

GeneratorSpec GeneratorSpec::explicit_leaves(std::uint32_t depth, std::vector<std::string> leaves) {
  GeneratorSpec s;
  s.kind = Kind::explicit_leaves;
  s.depth = depth;
  s.leaves = std::move(leaves);
  return s;
}

GeneratorSpec GeneratorSpec::lacunary_chain(std::uint32_t depth,
                                            std::vector<std::uint32_t> branch_heights,
                                            std::uint32_t order) {
  GeneratorSpec s;
  s.kind = Kind::lacunary_chain;
  s.depth = depth;
  s.branch_heights = std::move(branch_heights);
  s.chain_order = order;
  return s;
}

GeneratorSpec GeneratorSpec::cantor_pattern(std::uint32_t depth, std::vector<std::string> pattern) {
  GeneratorSpec s;
  s.kind = Kind::cantor_pattern;
  s.depth = depth;
  s.pattern = std::move(pattern);
  return s;
}

namespace {

DirTree build_full(std::uint32_t depth) {
  check_depth(depth);
  std::vector<std::uint64_t> leaves(std::size_t{1} << depth);
  for (std::size_t i = 0; i < leaves.size(); ++i) leaves[i] = i;
  return DirTree::from_leaves(depth, std::move(leaves));
}

DirTree build_chain(const GeneratorSpec& spec) {
  check_depth(spec.depth);
  if (spec.chain_order == 0) throw std::invalid_argument("chain order must be >= 1");
  std::vector<std::uint32_t> heights = spec.branch_heights;
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  for (std::uint32_t b : heights)
    if (b >= spec.depth) throw std::invalid_argument("branch height beyond depth");

  // Leaves are the bit strings whose 1s sit on at most `order` of the branch
  // heights: spine all-0, each branch drops into a chain one order lower.
  std::vector<std::uint64_t> leaves{0};
  std::vector<std::uint64_t> frontier{0};  // masks grouped by popcount
  for (std::uint32_t round = 1; round <= spec.chain_order && !frontier.empty(); ++round) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t mask : frontier) {
      // extend with a strictly deeper branch than any already used
      for (std::uint32_t b : heights) {
        std::uint64_t bit = std::uint64_t{1} << (spec.depth - 1 - b);
        if (mask != 0 && bit >= (mask & (~mask + 1))) continue;  // not below the lowest 1
        next.push_back(mask | bit);
      }
    }
    leaves.insert(leaves.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return DirTree::from_leaves(spec.depth, std::move(leaves));
}

DirTree build_cantor(const GeneratorSpec& spec) {
  check_depth(spec.depth);
  if (spec.pattern.empty()) throw std::invalid_argument("cantor pattern must be nonempty");
  if (spec.depth == 0) return DirTree::from_leaves(0, {0});
  std::vector<int> choice(spec.depth);  // 0 = left, 1 = right, 2 = branch
  std::size_t count = 1;
  for (std::uint32_t k = 0; k < spec.depth; ++k) {
    const std::string& tok = spec.pattern[k % spec.pattern.size()];
    if (tok == "branch") choice[k] = 2, count *= 2;
    else if (tok == "keep-left") choice[k] = 0;
    else if (tok == "keep-right") choice[k] = 1;
    else throw std::invalid_argument("unknown cantor pattern token: " + tok);
    if (count > (std::size_t{1} << kMaxDepth)) throw std::invalid_argument("pattern expands too far");
  }
  std::vector<std::uint64_t> leaves{0};
  for (std::uint32_t k = 0; k < spec.depth; ++k) {
    std::vector<std::uint64_t> next;
    next.reserve(leaves.size() * 2);
    for (std::uint64_t p : leaves) {
      if (choice[k] == 2) {
        next.push_back(p << 1);
        next.push_back(p << 1 | 1);
      } else {
        next.push_back(p << 1 | static_cast<std::uint64_t>(choice[k]));
      }
    }
    leaves = std::move(next);
  }
  return DirTree::from_leaves(spec.depth, std::move(leaves));
}

}  // namespace

DirTree build_tree(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::full:
      return build_full(spec.depth);
    case GeneratorSpec::Kind::single_ray: {
      if (spec.depth != spec.ray.size())
        throw std::invalid_argument("single-ray depth must match ray length");
      check_depth(spec.depth);
      return DirTree::from_leaves(spec.depth, {DyadicVertex::from_bits(spec.ray).path});
    }
    case GeneratorSpec::Kind::explicit_leaves:
      return DirTree::from_leaf_strings(spec.depth, spec.leaves);
    case GeneratorSpec::Kind::lacunary_chain:
      return build_chain(spec);
    case GeneratorSpec::Kind::cantor_pattern:
      return build_cantor(spec);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace kakeya
