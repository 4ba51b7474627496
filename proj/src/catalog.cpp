#include "simplervoice/catalog.hpp"

#include <istream>
#include <ostream>

#include "simplervoice/text.hpp"

namespace simplervoice {

std::string validate_record(const ProductRecord& r) {
  if (!text::is_all_digits(r.upc)) return "upc must be a non-empty string of digits";
  if (text::trim(r.title).empty()) return "title is empty";
  if (r.category_path.empty()) return "category path is empty";
  for (const auto& segment : r.category_path) {
    if (text::trim(segment).empty()) return "category path has an empty segment";
  }
  return {};
}

Catalog::Catalog(std::vector<ProductRecord> records) : records_(std::move(records)) {
  upc_index_.reserve(records_.size());
  title_index_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (auto problem = validate_record(r); !problem.empty()) {
      throw Error(Errc::MalformedLine, "record " + std::to_string(i + 1) + ": " + problem);
    }
    if (!upc_index_.emplace(r.upc, i).second) {
      throw Error(Errc::DuplicateUpc, "duplicate upc " + r.upc);
    }
    title_index_.emplace(text::normalize_title(r.title), i);
  }
}

const ProductRecord* Catalog::find_upc(std::string_view upc) const {
  const auto it = upc_index_.find(std::string(upc));
  return it == upc_index_.end() ? nullptr : &records_[it->second];
}

const ProductRecord* Catalog::find_title(std::string_view title) const {
  const auto it = title_index_.find(text::normalize_title(title));
  return it == title_index_.end() ? nullptr : &records_[it->second];
}

CatalogParse parse_catalog(std::istream& in) {
  std::vector<ProductRecord> records;
  std::vector<LineIssue> issues;
  std::unordered_map<std::string, std::size_t> first_seen;
  std::size_t data_lines = 0;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    ++data_lines;

    const auto fields = text::split(line, '\t');
    if (fields.size() != 4) {
      issues.push_back({line_no, Errc::MalformedLine,
                        "expected 4 tab-separated fields, got " + std::to_string(fields.size())});
      continue;
    }
    ProductRecord r;
    r.upc = std::string(text::trim(fields[0]));
    r.title = std::string(text::trim(fields[1]));
    for (const auto segment : text::split(text::trim(fields[2]), '/')) {
      r.category_path.emplace_back(text::trim(segment));
    }
    r.url = std::string(text::trim(fields[3]));

    if (auto problem = validate_record(r); !problem.empty()) {
      issues.push_back({line_no, Errc::MalformedLine, std::move(problem)});
      continue;
    }
    if (auto [it, inserted] = first_seen.emplace(r.upc, line_no); !inserted) {
      issues.push_back({line_no, Errc::DuplicateUpc,
                        "upc " + r.upc + " already defined on line " + std::to_string(it->second)});
      continue;
    }
    records.push_back(std::move(r));
  }

  if (data_lines == 0) throw Error(Errc::EmptyInput, "catalog has no records");
  if (records.empty()) {
    throw Error(Errc::MalformedLine,
                "all " + std::to_string(data_lines) + " catalog lines were rejected");
  }
  return {Catalog(std::move(records)), std::move(issues)};
}

void serialize_catalog(const Catalog& catalog, std::ostream& out) {
  for (const auto& r : catalog.records()) {
    out << r.upc << '\t' << r.title << '\t';
    for (std::size_t i = 0; i < r.category_path.size(); ++i) {
      if (i) out << '/';
      out << r.category_path[i];
    }
    out << '\t' << r.url << '\n';
  }
}

const ProductRecord& lookup(const Catalog& catalog, std::string_view key) {
  const auto k = text::trim(key);
  const ProductRecord* hit = text::is_all_digits(k) ? catalog.find_upc(k) : catalog.find_title(k);
  if (!hit) throw Error(Errc::NotFound, "no product matches '" + std::string(k) + "'");
  return *hit;
}

}  // namespace simplervoice
