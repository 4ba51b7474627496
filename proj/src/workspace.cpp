#include "simplervoice/workspace.hpp"

#include <fstream>
#include <sstream>

namespace simplervoice {

namespace {

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return in;
}

template <typename Fn>
auto with_path(const fs::path& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == Errc::Io) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(Errc::Io, "failed writing " + path.string());
}

}  // namespace

InputPaths workspace_layout(const fs::path& dir) {
  return {dir / "catalog.tsv", dir / "ngrams.tsv", dir / "lexicon.txt",
          dir / "rules.txt",   dir / "filter.txt", dir / "pictomap.txt"};
}

Workspace Workspace::from_inputs(const InputPaths& paths, IngestReport* report) {
  // Check every path up front so the first missing one is reported even if
  // an earlier file is also broken.
  for (const auto* p : {&paths.catalog, &paths.ngrams, &paths.lexicon, &paths.rules, &paths.filter, &paths.pictomap}) {
    if (!fs::is_regular_file(*p)) throw Error(Errc::Io, "cannot open " + p->string());
  }

  Workspace ws;
  std::vector<std::string> warnings;

  auto catalog = with_path(paths.catalog, [&] {
    auto in = open_input(paths.catalog);
    return parse_catalog(in);
  });
  for (const auto& issue : catalog.issues) warnings.push_back(format_issue(paths.catalog.string(), issue));
  ws.catalog = std::move(catalog.catalog);
  ws.tree = OntologyTree::build(ws.catalog);
  for (const auto& issue : ws.tree.warnings()) warnings.push_back(format_issue(paths.catalog.string(), issue));

  auto ngrams = with_path(paths.ngrams, [&] {
    auto in = open_input(paths.ngrams);
    return ingest_ngrams(in);
  });
  for (const auto& issue : ngrams.issues) warnings.push_back(format_issue(paths.ngrams.string(), issue));
  ws.ngrams = std::move(ngrams.store);

  ws.lexicon = with_path(paths.lexicon, [&] {
    auto in = open_input(paths.lexicon);
    return Lexicon::parse(in, paths.lexicon.string());
  });
  ws.rules = with_path(paths.rules, [&] {
    auto in = open_input(paths.rules);
    return HeuristicRules::parse(in, paths.rules.string());
  });
  ws.filter = with_path(paths.filter, [&] {
    auto in = open_input(paths.filter);
    return FilterList::parse(in, paths.filter.string());
  });
  ws.pictomap = with_path(paths.pictomap, [&] {
    auto in = open_input(paths.pictomap);
    return PictographMap::parse(in, paths.pictomap.string());
  });

  if (report) {
    report->products = ws.catalog.size();
    report->ngram_records = ws.ngrams.total_records();
    report->vocabulary = ws.ngrams.vocabulary_size();
    report->categories = ws.tree.size() - 1;
    report->verbs = ws.lexicon.verbs.size();
    report->pictograph_links = ws.pictomap.manual_links.size();
    report->warnings = std::move(warnings);
  }
  return ws;
}

Workspace Workspace::load(const fs::path& dir, IngestReport* report) {
  if (!fs::is_directory(dir)) throw Error(Errc::Io, "workspace " + dir.string() + " does not exist; run ingest first");
  return from_inputs(workspace_layout(dir), report);
}

void Workspace::save(const fs::path& dir) const {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::Io, "cannot create " + dir.string() + ": " + ec.message());
  const auto layout = workspace_layout(dir);
  auto emit = [](auto&& writer) {
    std::ostringstream out;
    writer(out);
    return out.str();
  };
  write_file(layout.catalog, emit([&](std::ostream& o) { serialize_catalog(catalog, o); }));
  write_file(layout.ngrams, emit([&](std::ostream& o) { ngrams.serialize(o); }));
  write_file(layout.lexicon, emit([&](std::ostream& o) { lexicon.serialize(o); }));
  write_file(layout.rules, emit([&](std::ostream& o) { rules.serialize(o); }));
  write_file(layout.filter, emit([&](std::ostream& o) { filter.serialize(o); }));
  write_file(layout.pictomap, emit([&](std::ostream& o) { pictomap.serialize(o); }));
}

IngestReport ingest_workspace(const InputPaths& paths, const fs::path& dir) {
  IngestReport report;
  const auto ws = Workspace::from_inputs(paths, &report);
  ws.save(dir);
  return report;
}

}  // namespace simplervoice
