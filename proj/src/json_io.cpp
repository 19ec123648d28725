#include "kakeya/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

#include "kakeya/structure.hpp"

namespace kakeya {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

std::string bits_of(std::uint32_t height, std::uint64_t path) {
  return DyadicVertex{height, path}.bits();
}

}  // namespace

std::string tree_to_json(const DirTree& tree) {
  json j;
  j["depth"] = tree.depth();
  json leaves = json::array();
  for (std::uint64_t p : tree.leaves()) leaves.push_back(bits_of(tree.depth(), p));
  j["leaves"] = std::move(leaves);
  return j.dump(2) + "\n";
}

DirTree tree_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("depth") || !j.contains("leaves"))
    throw std::invalid_argument("tree JSON needs depth and leaves");
  std::uint32_t depth = j["depth"].get<std::uint32_t>();
  std::vector<std::string> leaves = j["leaves"].get<std::vector<std::string>>();
  return DirTree::from_leaf_strings(depth, leaves);
}

GeneratorSpec generator_from_json(const std::string& text) {
  json j = parse(text);
  std::string kind = j.value("kind", "");
  GeneratorSpec s;
  if (kind == "full") {
    s = GeneratorSpec::full(j.at("depth").get<std::uint32_t>());
  } else if (kind == "single-ray") {
    s = GeneratorSpec::single_ray(j.at("ray").get<std::string>());
  } else if (kind == "explicit-leaves") {
    s = GeneratorSpec::explicit_leaves(j.at("depth").get<std::uint32_t>(),
                                       j.at("leaves").get<std::vector<std::string>>());
  } else if (kind == "lacunary-chain") {
    s = GeneratorSpec::lacunary_chain(j.at("depth").get<std::uint32_t>(),
                                      j.at("branch_heights").get<std::vector<std::uint32_t>>(),
                                      j.value("order", 1u));
  } else if (kind == "cantor-pattern") {
    s = GeneratorSpec::cantor_pattern(j.at("depth").get<std::uint32_t>(),
                                      j.at("pattern").get<std::vector<std::string>>());
  } else {
    throw std::invalid_argument("unknown generator kind: " + kind);
  }
  return s;
}

std::string generator_to_json(const GeneratorSpec& spec) {
  json j;
  switch (spec.kind) {
    case GeneratorSpec::Kind::full:
      j["kind"] = "full";
      j["depth"] = spec.depth;
      break;
    case GeneratorSpec::Kind::single_ray:
      j["kind"] = "single-ray";
      j["ray"] = spec.ray;
      break;
    case GeneratorSpec::Kind::explicit_leaves:
      j["kind"] = "explicit-leaves";
      j["depth"] = spec.depth;
      j["leaves"] = spec.leaves;
      break;
    case GeneratorSpec::Kind::lacunary_chain:
      j["kind"] = "lacunary-chain";
      j["depth"] = spec.depth;
      j["branch_heights"] = spec.branch_heights;
      j["order"] = spec.chain_order;
      break;
    case GeneratorSpec::Kind::cantor_pattern:
      j["kind"] = "cantor-pattern";
      j["depth"] = spec.depth;
      j["pattern"] = spec.pattern;
      break;
  }
  return j.dump(2) + "\n";
}

std::string analysis_report_json(const DirTree& tree) {
  SplitAnnotation ann = split_numbers(tree);
  LacunaryDecomposition dec = lacunary_order(tree);
  PrunedTree pruned = prune(tree);
  json j;
  j["split"] = ann.tree_split;
  j["order"] = dec.order;
  j["spine"] = dec.spine_leaf.bits();
  json gens = json::array();
  for (const auto& gen : pruned.generations) {
    json g = json::array();
    for (const auto& v : gen) g.push_back(v.bits());
    gens.push_back(std::move(g));
  }
  j["generations"] = std::move(gens);
  j["pruned_depth"] = pruned.depth();
  return j.dump(2) + "\n";
}

std::string sticky_to_json(const StickyMap& sigma) {
  json j;
  j["target"] = json::parse(tree_to_json(sigma.target().tree));
  json imgs = json::object();
  std::uint32_t h = sigma.depth();
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << h); ++k)
    imgs[bits_of(h, k)] = bits_of(h, sigma.leaf_images()[k]);
  j["leaf_images"] = std::move(imgs);
  return j.dump(2) + "\n";
}

}  // namespace kakeya
