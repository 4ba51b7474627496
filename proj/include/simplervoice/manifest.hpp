#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "simplervoice/workspace.hpp"

namespace simplervoice {

// Everything the describe command reports for one product.
struct Description {
  const ProductRecord* product = nullptr;
  Generation generation;
  PictographManifest pictographs;
  std::string provider;
  std::vector<std::string> images;
};

// Resolves `key`, generates the key message and links pictographs.
// Throws NotFound / NoVerbFound / NotInTree.
Description describe(const Workspace& ws, std::string_view key, const ImageProvider& images);

// Fixed key order; levels "1".."3" always present.
nlohmann::ordered_json to_json(const Workspace& ws, const Description& d);

// Level-selected message, then one "word<TAB>glyph<TAB>provenance" line per
// pictograph.
std::string to_text(const Description& d, int level);

}  // namespace simplervoice
