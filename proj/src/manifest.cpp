#include "simplervoice/manifest.hpp"

namespace simplervoice {

namespace {

std::string_view to_string(VerbSource s) { return s == VerbSource::NGram ? "ngram" : "heuristic"; }

std::string_view to_string(SubjectSource s) {
  switch (s) {
    case SubjectSource::TitleKeyword: return "title_keyword";
    case SubjectSource::CategoryRule: return "category_rule";
    case SubjectSource::Pronoun: return "pronoun";
    case SubjectSource::Default: return "default";
  }
  return "default";
}

nlohmann::ordered_json verb_list(const VerbSet& set) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [verb, count] : set.entries) out.push_back({{"verb", verb}, {"count", count}});
  return out;
}

nlohmann::ordered_json rungs_used(const VerbChoice& verb) {
  auto out = nlohmann::ordered_json::array();
  for (auto rung : {FallbackRung::ObjectParentsNeighbors, FallbackRung::ObjectParents, FallbackRung::ObjectOnly}) {
    out.push_back(to_string(rung));
    if (rung == verb.disambiguation.rung) return out;
  }
  if (verb.source == VerbSource::Heuristic) out.push_back("heuristic");
  return out;
}

}  // namespace

Description describe(const Workspace& ws, std::string_view key, const ImageProvider& images) {
  Description d;
  d.product = &lookup(ws.catalog, key);
  d.generation = generate_key_message(*d.product, ws.knowledge());
  d.pictographs = link_pictographs(d.generation.message, ws.pictomap, ws.tree, d.generation.object);
  d.provider = std::string(images.name());
  d.images = images.fetch(d.pictographs.image_query, d.pictographs.image_count);
  return d;
}

nlohmann::ordered_json to_json(const Workspace& ws, const Description& d) {
  using json = nlohmann::ordered_json;
  const auto& gen = d.generation;
  const auto& msg = gen.message;

  json product;
  product["upc"] = d.product->upc;
  product["title"] = d.product->title;
  product["category_path"] = d.product->category_path;
  product["url"] = d.product->url;

  json object;
  object["category"] = ws.tree.name(gen.object);
  object["parents"] = json::array();
  for (const auto id : parents_of(ws.tree, gen.object)) object["parents"].push_back(ws.tree.name(id));
  object["neighbors"] = json::array();
  for (const auto id : neighbors_of(ws.tree, gen.object)) object["neighbors"].push_back(ws.tree.name(id));

  json levels;
  for (int level = 1; level <= 3; ++level) levels[std::to_string(level)] = render(msg, level);

  json message;
  message["subject"] = msg.subject;
  message["verb"] = msg.verb_base;
  message["gerund"] = msg.verb_gerund;
  message["instrumental"] = msg.instrumental;
  message["object"] = msg.object_head;

  json pictographs = json::array();
  for (const auto& e : d.pictographs.entries) {
    json entry;
    entry["word"] = e.word;
    entry["glyph"] = e.glyph ? json(*e.glyph) : json(nullptr);
    entry["provenance"] = to_string(e.provenance);
    entry["linked_via"] = e.linked_via.empty() ? json(nullptr) : json(e.linked_via);
    pictographs.push_back(std::move(entry));
  }

  json images;
  images["provider"] = d.provider;
  images["query"] = d.pictographs.image_query;
  images["count"] = d.pictographs.image_count;
  images["references"] = d.images;

  json diagnostics;
  diagnostics["verb_source"] = to_string(gen.verb.source);
  diagnostics["fallback_rungs_used"] = rungs_used(gen.verb);
  diagnostics["heuristic_rules_fired"] = gen.heuristic_rules_fired;
  diagnostics["subject_source"] = to_string(gen.subject.source);
  diagnostics["object_verbs"] = verb_list(gen.verb.object_verbs);
  diagnostics["parent_verbs"] = verb_list(gen.verb.parent_verbs);
  diagnostics["neighbor_verbs"] = verb_list(gen.verb.neighbor_verbs);
  diagnostics["final_verbs"] = verb_list(gen.verb.disambiguation.verbs);

  json out;
  out["product"] = std::move(product);
  out["object"] = std::move(object);
  out["key_messages"] = std::move(levels);
  out["message"] = std::move(message);
  out["pictographs"] = std::move(pictographs);
  out["images"] = std::move(images);
  out["diagnostics"] = std::move(diagnostics);
  return out;
}

std::string to_text(const Description& d, int level) {
  std::string out = render(d.generation.message, level);
  out += '\n';
  for (const auto& e : d.pictographs.entries) {
    out += e.word;
    out += '\t';
    out += e.glyph ? *e.glyph : std::string("MISSING");
    out += '\t';
    out += to_string(e.provenance);
    out += '\n';
  }
  return out;
}

}  // namespace simplervoice
