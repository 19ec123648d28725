#include "kakeya/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "kakeya/rng.hpp"

namespace kakeya {

PercTree::PercTree(int height, std::vector<Node> nodes) : height_(height), nodes_(std::move(nodes)) {
  if (height < 0) throw std::invalid_argument("tree height must be nonnegative");
  if (nodes_.empty() || nodes_[0].depth != 0) throw std::invalid_argument("node 0 must be the root");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (int b = 0; b < 2; ++b) {
      std::int32_t c = nodes_[i].child[b];
      if (c == -1) continue;
      if (c <= static_cast<std::int32_t>(i) || c >= static_cast<std::int32_t>(nodes_.size()))
        throw std::invalid_argument("children must come after their parent");
      if (nodes_[static_cast<std::size_t>(c)].depth != nodes_[i].depth + 1)
        throw std::invalid_argument("child depth must be parent depth + 1");
    }
    if (nodes_[i].depth > height) throw std::invalid_argument("node below the tree height");
  }
}

PercTree PercTree::full(int n) {
  std::vector<Node> nodes;
  nodes.push_back({{-1, -1}, 0});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == n) continue;
    for (int b = 0; b < 2; ++b) {
      nodes[i].child[b] = static_cast<std::int32_t>(nodes.size());
      nodes.push_back({{-1, -1}, nodes[i].depth + 1});
    }
  }
  return PercTree(n, std::move(nodes));
}

PercTree PercTree::single_ray(int n) {
  std::vector<Node> nodes;
  for (int d = 0; d <= n; ++d) {
    Node node{{-1, -1}, d};
    if (d < n) node.child[0] = d + 1;
    nodes.push_back(node);
  }
  return PercTree(n, std::move(nodes));
}

PercTree PercTree::random_subtree(int n, std::uint64_t seed, double keep) {
  std::vector<Node> nodes;
  nodes.push_back({{-1, -1}, 0});
  std::uint64_t ctr = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == n) continue;
    for (int b = 0; b < 2; ++b) {
      ++ctr;
      if (rng_uniform01(seed, ctr) < keep) {
        nodes[i].child[b] = static_cast<std::int32_t>(nodes.size());
        nodes.push_back({{-1, -1}, nodes[i].depth + 1});
      }
    }
  }
  // force one surviving ray so the tree reaches the bottom level
  std::size_t v = 0;
  while (nodes[v].depth < n) {
    if (nodes[v].child[0] == -1 && nodes[v].child[1] == -1) {
      nodes[v].child[0] = static_cast<std::int32_t>(nodes.size());
      nodes.push_back({{-1, -1}, nodes[v].depth + 1});
    }
    v = static_cast<std::size_t>(nodes[v].child[0] != -1 ? nodes[v].child[0] : nodes[v].child[1]);
  }
  return PercTree(n, std::move(nodes));
}

Rational survival_exact(const PercTree& tree) {
  int n = tree.node_count();
  std::vector<Rational> p(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto& node = tree.node(i);
    if (node.depth == tree.height()) {
      p[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    Rational miss = 1;
    bool any = false;
    for (int b = 0; b < 2; ++b)
      if (node.child[b] != -1) {
        any = true;
        miss *= 1 - p[static_cast<std::size_t>(node.child[b])] / 2;
      }
    p[static_cast<std::size_t>(i)] = any ? 1 - miss : Rational(0);
  }
  return p[0];
}

std::optional<Rational> resistance(const PercTree& tree) {
  int n = tree.node_count();
  if (tree.height() == 0) return Rational(0);
  std::vector<std::optional<Rational>> r(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto& node = tree.node(i);
    if (node.depth == tree.height()) {
      r[static_cast<std::size_t>(i)] = Rational(0);
      continue;
    }
    Rational conductance = 0;
    for (int b = 0; b < 2; ++b)
      if (node.child[b] != -1) {
        const auto& rc = r[static_cast<std::size_t>(node.child[b])];
        if (rc) conductance += Rational(1) / (2 + 2 * *rc);
      }
    if (conductance != 0) r[static_cast<std::size_t>(i)] = Rational(1) / conductance;
  }
  return r[0];
}

McEstimate survival_mc(const PercTree& tree, std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::int64_t hits = 0;
  std::vector<std::int32_t> stack;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::uint64_t trial_seed = rng_derive(seed, static_cast<std::uint64_t>(t));
    stack.assign(1, 0);
    bool alive = false;
    while (!stack.empty() && !alive) {
      std::int32_t i = stack.back();
      stack.pop_back();
      const auto& node = tree.node(i);
      if (node.depth == tree.height()) {
        alive = true;
        break;
      }
      for (int b = 0; b < 2; ++b) {
        std::int32_t c = node.child[b];
        if (c != -1 && rng_coin(trial_seed, static_cast<std::uint64_t>(c)) == 1) stack.push_back(c);
      }
    }
    if (alive) ++hits;
  }
  double est = static_cast<double>(hits) / static_cast<double>(trials);
  double se = std::sqrt(est * (1 - est) / static_cast<double>(trials));
  return {est, se, trials, seed};
}

LyonsCheck lyons_check(const PercTree& tree) {
  LyonsCheck out;
  out.p = survival_exact(tree);
  out.r = resistance(tree);
  out.bound = out.r ? Rational(12) / (2 + *out.r) : Rational(0);
  out.pass = out.p <= out.bound;
  return out;
}

ChoosingTree possible_set(const PrunedTree& target, const Rational& x, const Rational& y) {
  if (x <= 1 || x > 2) throw std::invalid_argument("possible_set needs x in (1, 2]");
  ChoosingTree ct;
  ct.x = x;
  ct.y = y;
  std::uint32_t h = target.depth();
  ct.depth = h;
  if (y < 0 || y >= 3) return ct;

  BigInt scale = BigInt(1) << h;
  for (std::uint64_t kt = 0; kt < (std::uint64_t{1} << h); ++kt) {
    Rational t(BigInt(kt), scale);
    Rational hi = (y - t) * scale / x;        // slope window is (hi - 1/x, hi] in grid units
    Rational lo = hi - Rational(scale) / (x * scale);  // = hi - 1/x
    BigInt ks = rational_floor(hi);
    if (ks < 0 || ks >= scale) continue;
    if (Rational(ks) <= lo) continue;
    std::uint64_t image = ks.template convert_to<std::uint64_t>();
    if (!target.tree.contains({h, image})) continue;
    ct.possible.push_back({kt, image});
  }
  if (ct.possible.empty()) return ct;

  ct.nodes.push_back({0, 0, 0, h > 0 && target.tree.splits(DyadicVertex::root()), {}});
  std::map<std::tuple<std::uint32_t, std::uint64_t, std::uint64_t>, std::int32_t> index;
  index[{0, 0, 0}] = 0;
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> base_image;
  base_image[{0, 0}] = 0;

  int max_bits = 0;
  for (const auto& req : ct.possible) {
    std::int32_t cur = 0;
    int bits = 0;
    for (std::uint32_t k = 1; k <= h; ++k) {
      if (ct.nodes[static_cast<std::size_t>(cur)].image_splits) ++bits;
      std::uint64_t base = req.base >> (h - k);
      std::uint64_t image = req.image >> (h - k);
      int branch = static_cast<int>(base & 1);
      auto key = std::make_tuple(k, base, image);
      auto it = index.find(key);
      std::int32_t next;
      if (it == index.end()) {
        next = static_cast<std::int32_t>(ct.nodes.size());
        ct.nodes.push_back(
            {base, image, k, k < h && target.tree.splits({k, image}), {}});
        index[key] = next;
        ct.nodes[static_cast<std::size_t>(cur)].kids[branch].push_back(next);
        auto [bit, inserted] = base_image.try_emplace({k, base}, image);
        if (!inserted && bit->second != image) ct.consistent = false;
      } else {
        next = it->second;
      }
      cur = next;
    }
    max_bits = std::max(max_bits, bits);
  }
  ct.choosing_height = max_bits;
  return ct;
}

std::optional<PercTree> ChoosingTree::percolation_tree() const {
  if (!consistent || nodes.empty()) return std::nullopt;
  // One percolation node per consumed bit; forced edges are contracted. The
  // result is a plain tree only if every contracted segment hangs off a
  // single bit edge, which consistency guarantees, and all possible leaves
  // sit at the same bit depth.
  std::vector<PercTree::Node> pnodes;
  pnodes.push_back({{-1, -1}, 0});

  struct Item {
    std::int32_t rnode;
    std::int32_t pnode;
    int bit_depth;
  };
  std::vector<Item> stack{{0, 0, 0}};
  bool uniform = true;
  int leaf_depth = -1;
  std::vector<int> exit_count(1, 0);

  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const RNode& rn = nodes[static_cast<std::size_t>(it.rnode)];
    if (rn.height == depth) {
      if (leaf_depth == -1) leaf_depth = it.bit_depth;
      else if (leaf_depth != it.bit_depth) uniform = false;
      continue;
    }
    for (int b = 0; b < 2; ++b) {
      for (std::int32_t c : rn.kids[b]) {
        if (rn.image_splits) {
          int slot = exit_count[static_cast<std::size_t>(it.pnode)]++;
          if (slot > 1) return std::nullopt;  // more than two bit exits from one segment
          std::int32_t np = static_cast<std::int32_t>(pnodes.size());
          pnodes.push_back({{-1, -1}, it.bit_depth + 1});
          exit_count.push_back(0);
          pnodes[static_cast<std::size_t>(it.pnode)].child[slot] = np;
          stack.push_back({c, np, it.bit_depth + 1});
        } else {
          stack.push_back({c, it.pnode, it.bit_depth});
        }
      }
    }
  }
  if (!uniform || leaf_depth <= 0) return std::nullopt;
  // drop nodes deeper than the terminal level (none by construction) and
  // check every pnode leaf reaches the terminal depth
  for (const auto& n : pnodes) {
    if (n.child[0] == -1 && n.child[1] == -1 && n.depth != leaf_depth) return std::nullopt;
  }
  return PercTree(leaf_depth, std::move(pnodes));
}

namespace {

Rational cover_recursion(const ChoosingTree& ct, std::size_t idx) {
  const ChoosingTree::RNode& rn = ct.nodes[idx];
  if (rn.height == ct.depth) return 1;
  Rational miss = 1;
  for (int b = 0; b < 2; ++b) {
    const auto& group = rn.kids[b];
    if (group.empty()) continue;
    Rational g = 0;
    if (rn.image_splits) {
      for (std::int32_t c : group) g += cover_recursion(ct, static_cast<std::size_t>(c)) / 2;
    } else {
      g = cover_recursion(ct, static_cast<std::size_t>(group[0]));
    }
    miss *= 1 - g;
  }
  return 1 - miss;
}

}  // namespace

Rational cover_probability_exact(const ChoosingTree& choosing, const PrunedTree&) {
  if (choosing.possible.empty()) return 0;
  return cover_recursion(choosing, 0);
}

Rational cover_probability_exact(const PrunedTree& target, const Rational& x, const Rational& y) {
  ChoosingTree ct = possible_set(target, x, y);
  return cover_probability_exact(ct, target);
}

McEstimate cover_probability_mc(const std::shared_ptr<const PrunedTree>& target, const Rational& x,
                                const Rational& y, std::int64_t trials, std::uint64_t seed) {
  if (x <= 1 || x > 2) throw std::invalid_argument("cover probability needs x in (1, 2]");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const PrunedTree& p = *target;
  std::uint32_t h = p.depth();

  // integer form of 0 <= y - t - x s < 2^-h, scaled by den(x) den(y) 2^h
  BigInt qx = denominator(x), px = numerator(x);
  BigInt qy = denominator(y), py = numerator(y);
  BigInt big_w = qx * qy;
  BigInt big_b = px * qy;
  std::vector<BigInt> big_c;
  big_c.reserve(std::size_t{1} << h);
  for (std::uint64_t kt = 0; kt < (std::uint64_t{1} << h); ++kt)
    big_c.push_back(py * qx * (BigInt(1) << h) - BigInt(kt) * qx * qy);

  bool fits = true;
  auto fit = [&fits](const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() / 4 ||
        v < std::numeric_limits<std::int64_t>::min() / 4)
      fits = false;
    return fits ? v.template convert_to<std::int64_t>() : 0;
  };
  std::int64_t w64 = fit(big_w), b64 = fit(big_b);
  std::vector<std::int64_t> c64;
  for (const auto& c : big_c) c64.push_back(fit(c));

  std::int64_t hits = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::uint64_t ts = rng_derive(seed, static_cast<std::uint64_t>(trial));
    StickyMap sigma = sample_sticky(target, ts);
    const auto& img = sigma.leaf_images();
    bool in = false;
    if (fits) {
      for (std::uint64_t kt = 0; kt < img.size() && !in; ++kt) {
        std::int64_t r = c64[kt] - b64 * static_cast<std::int64_t>(img[kt]);
        in = r >= 0 && r < w64;
      }
    } else {
      for (std::uint64_t kt = 0; kt < img.size() && !in; ++kt) {
        BigInt r = big_c[kt] - big_b * BigInt(img[kt]);
        in = r >= 0 && r < big_w;
      }
    }
    if (in) ++hits;
  }
  double est = static_cast<double>(hits) / static_cast<double>(trials);
  double se = std::sqrt(est * (1 - est) / static_cast<double>(trials));
  return {est, se, trials, seed};
}

}  // namespace kakeya
