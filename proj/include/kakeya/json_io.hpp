#pragma once

#include <string>

#include "kakeya/sticky.hpp"

namespace kakeya {

/// {"depth": h, "leaves": ["0101", ...]} — canonical form for any generator.
std::string tree_to_json(const DirTree& tree);
DirTree tree_from_json(const std::string& text);

GeneratorSpec generator_from_json(const std::string& text);
std::string generator_to_json(const GeneratorSpec& spec);

/// {"split": N, "order": N, "spine": "bits", "generations": [[...], ...]}
std::string analysis_report_json(const DirTree& tree);

/// {"target": <tree json>, "leaf_images": {"00": "01", ...}}
std::string sticky_to_json(const StickyMap& sigma);

}  // namespace kakeya
