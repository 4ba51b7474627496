#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simplervoice {

// Plain-text config layout shared by the lexicon, rules and pictograph files:
//
//   # comment
//   verbs:
//   eat
//   irregulars:
//   eaten -> eat
//
// A line ending in ':' opens a section. Blank lines and '#' comments are
// skipped. Map entries use "->" or the UTF-8 arrow "→".
struct SectionLine {
  std::size_t line = 0;
  std::string text;
};

using Sections = std::map<std::string, std::vector<SectionLine>>;

// Throws Error(InvalidConfig) for content before the first header or for a
// header outside `allowed` (when non-empty).
Sections read_sections(std::istream& in, std::string_view source,
                       const std::vector<std::string_view>& allowed = {});

// "a -> b" split into trimmed halves; nullopt when there is no arrow or
// either side is empty.
std::optional<std::pair<std::string, std::string>> split_mapping(std::string_view line);

}  // namespace simplervoice
