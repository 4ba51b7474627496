#include "simplervoice/visual.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "simplervoice/sections.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

namespace {

[[noreturn]] void config_error(std::string_view source, std::size_t line, const std::string& what) {
  throw Error(Errc::InvalidConfig, std::string(source) + ":" + std::to_string(line) + ": " + what);
}

bool path_safe(std::string_view id) {
  if (id.empty() || id.front() == '/' || id.find("..") != std::string_view::npos) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-' || c == '.' || c == '/';
  });
}

const std::string* manual(const PictographMap& map, const std::string& word) {
  const auto it = map.manual_links.find(word);
  return it == map.manual_links.end() ? nullptr : &it->second;
}

PictographEntry link_word(const PictographMap& map, const std::string& word, const std::vector<std::string>& fallbacks) {
  if (const auto* glyph = manual(map, word)) return {word, *glyph, LinkProvenance::Manual, word};
  if (const auto it = map.synonyms.find(word); it != map.synonyms.end()) {
    for (const auto& syn : it->second) {
      if (const auto* glyph = manual(map, syn)) return {word, *glyph, LinkProvenance::Synonym, syn};
    }
  }
  for (const auto& category : fallbacks) {
    if (const auto* glyph = manual(map, category)) return {word, *glyph, LinkProvenance::OntologyFallback, category};
  }
  return {word, std::nullopt, LinkProvenance::Missing, {}};
}

}  // namespace

PictographMap PictographMap::parse(std::istream& in, std::string_view source) {
  const auto sections = read_sections(in, source, {"links", "synonyms"});
  PictographMap map;
  if (const auto it = sections.find("links"); it != sections.end()) {
    for (const auto& l : it->second) {
      auto m = split_mapping(l.text);
      if (!m) config_error(source, l.line, "expected 'word -> glyph-id'");
      if (!path_safe(m->second)) config_error(source, l.line, "glyph id '" + m->second + "' is not path-safe");
      map.manual_links[text::to_lower(m->first)] = m->second;
    }
  }
  if (const auto it = sections.find("synonyms"); it != sections.end()) {
    for (const auto& l : it->second) {
      auto m = split_mapping(l.text);
      if (!m) config_error(source, l.line, "expected 'word -> synonym, synonym'");
      const auto word = text::to_lower(m->first);
      std::vector<std::string> list;
      for (const auto piece : text::split(m->second, ',')) {
        const auto syn = text::to_lower(text::trim(piece));
        if (syn.empty()) config_error(source, l.line, "empty synonym");
        if (syn == word) config_error(source, l.line, "'" + word + "' lists itself as a synonym");
        list.push_back(syn);
      }
      map.synonyms[word] = std::move(list);
    }
  }
  return map;
}

void PictographMap::serialize(std::ostream& out) const {
  out << "links:\n";
  for (const auto& [w, g] : manual_links) out << w << " -> " << g << '\n';
  out << "\nsynonyms:\n";
  for (const auto& [w, list] : synonyms) {
    out << w << " -> ";
    for (std::size_t i = 0; i < list.size(); ++i) out << (i ? ", " : "") << list[i];
    out << '\n';
  }
}

std::string_view to_string(LinkProvenance p) noexcept {
  switch (p) {
    case LinkProvenance::Manual: return "manual";
    case LinkProvenance::Synonym: return "synonym";
    case LinkProvenance::OntologyFallback: return "ontology-fallback";
    case LinkProvenance::Missing: return "missing";
  }
  return "missing";
}

PictographManifest link_pictographs(const KeyMessage& message, const PictographMap& map, const OntologyTree& tree,
                                    NodeId object) {
  std::vector<std::string> ancestors;
  for (const auto id : parents_of(tree, object)) ancestors.push_back(text::to_lower(text::head_word(tree.name(id))));

  PictographManifest manifest;
  manifest.entries.push_back(link_word(map, text::to_lower(message.subject), {}));
  manifest.entries.push_back(link_word(map, text::to_lower(message.verb_base), {}));
  // Multi-word objects link through their head noun.
  manifest.entries.push_back(link_word(map, std::string(text::head_word(text::to_lower(message.object_head))), ancestors));

  const auto query = build_image_query(message);
  manifest.image_query = query.text;
  manifest.image_count = query.count;
  return manifest;
}

ImageQuery build_image_query(const KeyMessage& message, int count) {
  if (count < 2) throw Error(Errc::InvalidConfig, "image count must be at least 2");
  return {render(message, 3), count};
}

std::vector<std::string> StubImageProvider::fetch(std::string_view query, int count) const {
  std::string slug;
  for (const char c : text::to_lower(query)) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      slug += c;
    } else if (!slug.empty() && slug.back() != '-') {
      slug += '-';
    }
  }
  while (!slug.empty() && slug.back() == '-') slug.pop_back();
  std::vector<std::string> refs;
  for (int i = 1; i <= count; ++i) refs.push_back("stub://images/" + slug + "/" + std::to_string(i));
  return refs;
}

std::unique_ptr<ImageProvider> make_image_provider(std::string_view name) {
  if (name == "stub") return std::make_unique<StubImageProvider>();
  throw Error(Errc::UnknownProvider, "unknown image provider '" + std::string(name) + "'");
}

std::vector<std::string> image_provider_names() { return {"stub"}; }

}  // namespace simplervoice
