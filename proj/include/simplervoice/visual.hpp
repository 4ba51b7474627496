#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplervoice/messagegen.hpp"
#include "simplervoice/ontology.hpp"

namespace simplervoice {

struct PictographMap {
  std::map<std::string, std::string> manual_links;         // word -> glyph id
  std::map<std::string, std::vector<std::string>> synonyms;  // word -> ordered synonyms

  // Sections "links:" (word -> glyph) and "synonyms:" (word -> a, b, c).
  // Throws InvalidConfig for unsafe glyph ids or self-referencing synonyms.
  static PictographMap parse(std::istream& in, std::string_view source = "pictomap");
  void serialize(std::ostream& out) const;

  bool operator==(const PictographMap&) const = default;
};

// Ordered by preference; a larger value is a weaker link.
enum class LinkProvenance { Manual = 0, Synonym = 1, OntologyFallback = 2, Missing = 3 };

std::string_view to_string(LinkProvenance p) noexcept;

struct PictographEntry {
  std::string word;                  // lowercase content word
  std::optional<std::string> glyph;  // nullopt when missing
  LinkProvenance provenance = LinkProvenance::Missing;
  std::string linked_via;            // word whose manual link supplied the glyph

  bool operator==(const PictographEntry&) const = default;
};

inline constexpr int kDefaultImageCount = 4;

struct ImageQuery {
  std::string text;
  int count = kDefaultImageCount;
};

struct PictographManifest {
  std::vector<PictographEntry> entries;  // subject, verb, object
  std::string image_query;
  int image_count = kDefaultImageCount;
};

// Links subject, verb and object (the "with" is skipped): manual link, then
// synonyms in order, then (object only) ancestor categories nearest-first.
PictographManifest link_pictographs(const KeyMessage& message, const PictographMap& map, const OntologyTree& tree,
                                    NodeId object);

// The level-3 message, asking for several images so the product type is not
// confused with its general category. count must be >= 2.
ImageQuery build_image_query(const KeyMessage& message, int count = kDefaultImageCount);

class ImageProvider {
 public:
  virtual ~ImageProvider() = default;
  virtual std::string_view name() const = 0;
  // At most `count` image references for `query`. Implementations must be
  // safe to call concurrently.
  virtual std::vector<std::string> fetch(std::string_view query, int count) const = 0;
};

// Offline, deterministic placeholder references: "stub://images/<slug>/<i>".
class StubImageProvider final : public ImageProvider {
 public:
  std::string_view name() const override { return "stub"; }
  std::vector<std::string> fetch(std::string_view query, int count) const override;
};

// "stub" is always registered. Throws UnknownProvider.
std::unique_ptr<ImageProvider> make_image_provider(std::string_view name);
std::vector<std::string> image_provider_names();

}  // namespace simplervoice
