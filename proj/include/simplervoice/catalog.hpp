#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simplervoice/error.hpp"

namespace simplervoice {

struct ProductRecord {
  std::string upc;
  std::string title;
  std::vector<std::string> category_path;  // root-first
  std::string url;

  const std::string& leaf_category() const { return category_path.back(); }

  bool operator==(const ProductRecord&) const = default;
};

// Immutable product index keyed by UPC and by normalized title.
class Catalog {
 public:
  Catalog() = default;

  // Validates every record and rejects duplicate UPCs with Error(DuplicateUpc).
  // When two records normalize to the same title, the first one is indexed.
  explicit Catalog(std::vector<ProductRecord> records);

  const std::vector<ProductRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  const ProductRecord* find_upc(std::string_view upc) const;
  const ProductRecord* find_title(std::string_view title) const;

  bool operator==(const Catalog& other) const { return records_ == other.records_; }

 private:
  std::vector<ProductRecord> records_;
  std::unordered_map<std::string, std::size_t> upc_index_;
  std::unordered_map<std::string, std::size_t> title_index_;
};

struct CatalogParse {
  Catalog catalog;
  std::vector<LineIssue> issues;  // MalformedLine / DuplicateUpc, in line order
};

// Tab-separated "upc, title, a/b/c, url" per line; '#' lines and blank lines
// are skipped. Throws EmptyInput when no data lines exist and MalformedLine
// when every data line was rejected.
CatalogParse parse_catalog(std::istream& in);

void serialize_catalog(const Catalog& catalog, std::ostream& out);

// Digits-only keys match by UPC, anything else by normalized title.
// Throws Error(NotFound).
const ProductRecord& lookup(const Catalog& catalog, std::string_view key);

// Checks the record field invariants; returns an empty string when valid.
std::string validate_record(const ProductRecord& record);

}  // namespace simplervoice
