#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "simplervoice/catalog.hpp"
#include "simplervoice/lexicon.hpp"
#include "simplervoice/messagegen.hpp"
#include "simplervoice/ngram.hpp"
#include "simplervoice/ontology.hpp"
#include "simplervoice/visual.hpp"

namespace simplervoice {

namespace fs = std::filesystem;

struct InputPaths {
  fs::path catalog;
  fs::path ngrams;
  fs::path lexicon;
  fs::path rules;
  fs::path filter;
  fs::path pictomap;
};

// File names inside a workspace directory.
InputPaths workspace_layout(const fs::path& dir);

struct IngestReport {
  std::size_t products = 0;
  std::size_t ngram_records = 0;
  std::size_t vocabulary = 0;
  std::size_t categories = 0;  // tree nodes, root excluded
  std::size_t verbs = 0;
  std::size_t pictograph_links = 0;
  std::vector<std::string> warnings;  // "path:line: Kind: reason"
};

// All loaded, validated inputs plus the derived ontology.
struct Workspace {
  Catalog catalog;
  OntologyTree tree;
  NGramStore ngrams;
  Lexicon lexicon;
  HeuristicRules rules;
  FilterList filter;
  PictographMap pictomap;

  // Reads and validates every input. Missing files raise Error(Io) naming
  // the path; parse errors are re-raised with the path prepended.
  static Workspace from_inputs(const InputPaths& paths, IngestReport* report = nullptr);
  static Workspace load(const fs::path& dir, IngestReport* report = nullptr);

  // Writes re-serialized inputs into `dir` (created if needed).
  void save(const fs::path& dir) const;

  Knowledge knowledge() const { return {tree, ngrams, lexicon, rules, filter}; }
};

// Reads `paths`, validates and saves them into `dir`.
IngestReport ingest_workspace(const InputPaths& paths, const fs::path& dir);

}  // namespace simplervoice
