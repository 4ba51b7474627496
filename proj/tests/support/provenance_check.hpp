#pragma once
// Independent restatement of the pictograph linking rules, used to judge
// every manifest entry.

#include <string>
#include <vector>

#include "simplervoice/visual.hpp"

namespace simplervoice::testing {

// Returns an empty string when `entry` is exactly what the linking chain
// must produce for `word`, else a description of the problem.
inline std::string check_entry(const PictographEntry& e, const PictographMap& map,
                               const std::vector<std::string>& ancestors, bool is_object) {
  auto glyph_of = [&](const std::string& w) -> const std::string* {
    const auto it = map.manual_links.find(w);
    return it == map.manual_links.end() ? nullptr : &it->second;
  };
  std::string expected_via;
  LinkProvenance expected = LinkProvenance::Missing;
  if (glyph_of(e.word)) {
    expected = LinkProvenance::Manual;
    expected_via = e.word;
  } else {
    if (const auto it = map.synonyms.find(e.word); it != map.synonyms.end()) {
      for (const auto& s : it->second) {
        if (glyph_of(s)) {
          expected = LinkProvenance::Synonym;
          expected_via = s;
          break;
        }
      }
    }
    if (expected == LinkProvenance::Missing && is_object) {
      for (const auto& a : ancestors) {
        if (glyph_of(a)) {
          expected = LinkProvenance::OntologyFallback;
          expected_via = a;
          break;
        }
      }
    }
  }
  if (e.provenance != expected) {
    return e.word + ": provenance " + std::string(to_string(e.provenance)) + ", expected " +
           std::string(to_string(expected));
  }
  if (expected == LinkProvenance::Missing) {
    return e.glyph || !e.linked_via.empty() ? e.word + ": missing entry carries a glyph" : "";
  }
  if (e.linked_via != expected_via) return e.word + ": linked via " + e.linked_via + ", expected " + expected_via;
  if (!e.glyph || *e.glyph != *glyph_of(expected_via)) return e.word + ": glyph does not match " + expected_via;
  return {};
}

}  // namespace simplervoice::testing
