#include "simplervoice/sections.hpp"

#include <algorithm>
#include <istream>

#include "simplervoice/error.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

Sections read_sections(std::istream& in, std::string_view source,
                       const std::vector<std::string_view>& allowed) {
  Sections sections;
  std::string current;
  bool have_section = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.back() == ':' && line.find("->") == std::string_view::npos) {
      current = text::to_lower(text::trim(line.substr(0, line.size() - 1)));
      if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), current) == allowed.end()) {
        throw Error(Errc::InvalidConfig, std::string(source) + ":" + std::to_string(line_no) +
                                             ": unknown section '" + current + "'");
      }
      sections[current];
      have_section = true;
      continue;
    }
    if (!have_section) {
      throw Error(Errc::InvalidConfig, std::string(source) + ":" + std::to_string(line_no) +
                                           ": entry before any section header");
    }
    sections[current].push_back({line_no, std::string(line)});
  }
  return sections;
}

std::optional<std::pair<std::string, std::string>> split_mapping(std::string_view line) {
  static constexpr std::string_view kArrows[] = {"->", "\xE2\x86\x92"};
  for (const auto arrow : kArrows) {
    const auto pos = line.find(arrow);
    if (pos == std::string_view::npos) continue;
    const auto lhs = text::trim(line.substr(0, pos));
    const auto rhs = text::trim(line.substr(pos + arrow.size()));
    if (lhs.empty() || rhs.empty()) return std::nullopt;
    return std::pair{std::string(lhs), std::string(rhs)};
  }
  return std::nullopt;
}

}  // namespace simplervoice
