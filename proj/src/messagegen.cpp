#include "simplervoice/messagegen.hpp"

#include <istream>
#include <ostream>

#include "simplervoice/sections.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

namespace {

[[noreturn]] void config_error(std::string_view source, std::size_t line, const std::string& what) {
  throw Error(Errc::InvalidConfig, std::string(source) + ":" + std::to_string(line) + ": " + what);
}

// The noun queried in the n-gram store for a category name.
std::string query_noun(std::string_view category) { return text::singularize(text::head_word(category)); }

VerbSet verbs_for_nodes(const Knowledge& k, const std::vector<NodeId>& nodes) {
  std::vector<VerbSet> sets;
  sets.reserve(nodes.size());
  for (const auto id : nodes) sets.push_back(verbs_for(k.store, k.lexicon, query_noun(k.tree.name(id)), k.window));
  return VerbSet::merge(sets);
}

// The object node followed by its ancestors (root excluded), nearest first.
std::vector<NodeId> self_and_parents(const OntologyTree& tree, NodeId object) {
  std::vector<NodeId> chain{object};
  const auto parents = parents_of(tree, object);
  chain.insert(chain.end(), parents.begin(), parents.end());
  return chain;
}

const std::string* find_rule(const std::map<std::string, std::string>& rules, std::string_view key) {
  const auto it = rules.find(text::to_lower(key));
  return it == rules.end() ? nullptr : &it->second;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

int vowel_groups(std::string_view w) {
  int groups = 0;
  bool in_group = false;
  for (const char c : w) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

}  // namespace

HeuristicRules HeuristicRules::parse(std::istream& in, std::string_view source) {
  const auto sections =
      read_sections(in, source, {"category_verb", "category_subject", "title_subject", "instrumental"});
  HeuristicRules rules;
  auto read_map = [&](const char* name, std::map<std::string, std::string>& into, bool lower_value) {
    const auto it = sections.find(name);
    if (it == sections.end()) return;
    for (const auto& l : it->second) {
      auto m = split_mapping(l.text);
      if (!m) config_error(source, l.line, "expected 'key -> value'");
      auto value = lower_value ? text::to_lower(m->second) : text::capitalize(m->second);
      if (value.find(' ') != std::string::npos) config_error(source, l.line, "value must be a single word");
      into[text::to_lower(m->first)] = std::move(value);
    }
  };
  read_map("category_verb", rules.category_verb, true);
  read_map("category_subject", rules.category_subject, false);
  read_map("title_subject", rules.title_subject, false);
  if (const auto it = sections.find("instrumental"); it != sections.end()) {
    for (const auto& l : it->second) rules.instrumental_categories.insert(text::to_lower(l.text));
  }
  return rules;
}

void HeuristicRules::serialize(std::ostream& out) const {
  out << "category_verb:\n";
  for (const auto& [k, v] : category_verb) out << k << " -> " << v << '\n';
  out << "\ncategory_subject:\n";
  for (const auto& [k, v] : category_subject) out << k << " -> " << v << '\n';
  out << "\ntitle_subject:\n";
  for (const auto& [k, v] : title_subject) out << k << " -> " << v << '\n';
  out << "\ninstrumental:\n";
  for (const auto& c : instrumental_categories) out << c << '\n';
}

FilterList FilterList::parse(std::istream& in, std::string_view source) {
  FilterList filter;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_of(" \t") != std::string_view::npos) config_error(source, line_no, "expected one verb per line");
    filter.restricted_verbs.insert(text::to_lower(line));
  }
  if (filter.restricted_verbs.empty()) throw Error(Errc::InvalidConfig, std::string(source) + ": filter list is empty");
  return filter;
}

void FilterList::serialize(std::ostream& out) const {
  for (const auto& v : restricted_verbs) out << v << '\n';
}

std::string_view to_string(FallbackRung rung) noexcept {
  switch (rung) {
    case FallbackRung::ObjectParentsNeighbors: return "object+parents+neighbors";
    case FallbackRung::ObjectParents: return "object+parents";
    case FallbackRung::ObjectOnly: return "object";
    case FallbackRung::Empty: return "empty";
  }
  return "empty";
}

Disambiguation disambiguate_verbs(const VerbSet& object, const VerbSet& parents, const VerbSet& neighbors,
                                  const FilterList& filter) {
  auto keep = [&](auto&& pred) {
    VerbSet out;
    for (const auto& e : object.entries) {
      if (!filter.contains(e.first) && pred(e.first)) out.entries.push_back(e);
    }
    rank(out.entries);
    return out;
  };

  if (auto v = keep([&](const std::string& w) { return parents.contains(w) && neighbors.contains(w); }); !v.empty()) {
    return {std::move(v), FallbackRung::ObjectParentsNeighbors};
  }
  if (auto v = keep([&](const std::string& w) { return parents.contains(w); }); !v.empty()) {
    return {std::move(v), FallbackRung::ObjectParents};
  }
  if (auto v = keep([](const std::string&) { return true; }); !v.empty()) {
    return {std::move(v), FallbackRung::ObjectOnly};
  }
  return {};
}

VerbChoice choose_verb(const ProductRecord& record, const Knowledge& k) {
  const auto object = object_type(k.tree, record);
  VerbChoice choice;
  choice.object_verbs = verbs_for(k.store, k.lexicon, query_noun(k.tree.name(object)), k.window);
  choice.parent_verbs = verbs_for_nodes(k, parents_of(k.tree, object));
  choice.neighbor_verbs = verbs_for_nodes(k, neighbors_of(k.tree, object));
  choice.disambiguation = disambiguate_verbs(choice.object_verbs, choice.parent_verbs, choice.neighbor_verbs, k.filter);

  if (!choice.disambiguation.verbs.empty()) {
    choice.verb = choice.disambiguation.verbs.entries.front().first;
    choice.source = VerbSource::NGram;
    return choice;
  }
  for (const auto id : self_and_parents(k.tree, object)) {
    if (const auto* verb = find_rule(k.rules.category_verb, k.tree.name(id))) {
      choice.verb = *verb;
      choice.source = VerbSource::Heuristic;
      choice.rule = "category_verb:" + text::to_lower(k.tree.name(id));
      return choice;
    }
  }
  throw Error(Errc::NoVerbFound, "no verb found for '" + record.title + "' (category '" + k.tree.name(object) + "')");
}

SubjectChoice choose_subject(const ProductRecord& record, NodeId object, const Knowledge& k) {
  const auto title = text::normalize_title(record.title);
  for (const auto word : text::split_ws(title)) {
    // Possessives lose their apostrophe during normalization ("women's" -> "womens").
    for (const auto& candidate : {std::string(word), text::singularize(word)}) {
      if (const auto* subject = find_rule(k.rules.title_subject, candidate)) {
        return {*subject, SubjectSource::TitleKeyword, candidate};
      }
    }
  }
  for (const auto id : self_and_parents(k.tree, object)) {
    if (const auto* subject = find_rule(k.rules.category_subject, k.tree.name(id))) {
      return {*subject, SubjectSource::CategoryRule, text::to_lower(k.tree.name(id))};
    }
  }

  const auto pronouns = pronouns_for(k.store, k.lexicon, query_noun(k.tree.name(object)), k.window);
  if (!pronouns.empty()) {
    const auto top = pronouns.front().second;
    std::string pick = pronouns.front().first;
    bool tied = false;
    for (std::size_t i = 1; i < pronouns.size() && pronouns[i].second == top; ++i) tied = true;
    if (tied) {
      const auto tie_noun = text::to_lower(kTieSubject);
      for (std::size_t i = 0; i < pronouns.size() && pronouns[i].second == top; ++i) {
        if (k.lexicon.pronouns.at(pronouns[i].first) == tie_noun) {
          pick = pronouns[i].first;
          break;
        }
      }
    }
    return {text::capitalize(k.lexicon.pronouns.at(pick)), SubjectSource::Pronoun, pick};
  }
  return {std::string(kDefaultSubject), SubjectSource::Default, {}};
}

std::string gerundize(std::string_view verb) {
  static const std::map<std::string, std::string, std::less<>> kIrregular = {
      {"admit", "admitting"},     {"agree", "agreeing"},     {"be", "being"},
      {"begin", "beginning"},     {"commit", "committing"},  {"control", "controlling"},
      {"dye", "dyeing"},          {"flee", "fleeing"},       {"forget", "forgetting"},
      {"free", "freeing"},        {"mimic", "mimicking"},    {"occur", "occurring"},
      {"panic", "panicking"},     {"permit", "permitting"},  {"picnic", "picnicking"},
      {"prefer", "preferring"},   {"refer", "referring"},    {"regret", "regretting"},
      {"see", "seeing"},          {"singe", "singeing"},     {"traffic", "trafficking"},
  };
  const auto w = text::to_lower(text::trim(verb));
  if (w.empty()) throw Error(Errc::EmptyWord, "cannot form the gerund of an empty word");
  if (const auto it = kIrregular.find(w); it != kIrregular.end()) return it->second;

  const auto n = w.size();
  if (n >= 2 && w.ends_with("ie")) return w.substr(0, n - 2) + "ying";
  if (n >= 2 && (w.ends_with("ee") || w.ends_with("ye") || w.ends_with("oe"))) return w + "ing";
  if (n >= 2 && w.back() == 'e') return w.substr(0, n - 1) + "ing";
  if (n >= 3 && vowel_groups(w) == 1) {
    const char a = w[n - 3], b = w[n - 2], c = w[n - 1];
    if (!is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' && c != 'x' && c != 'y') return w + c + "ing";
  }
  return w + "ing";
}

Generation generate_key_message(const ProductRecord& record, const Knowledge& k) {
  Generation gen;
  gen.object = object_type(k.tree, record);
  gen.verb = choose_verb(record, k);
  gen.subject = choose_subject(record, gen.object, k);

  auto& msg = gen.message;
  msg.subject = text::capitalize(gen.subject.subject);
  msg.verb_base = gen.verb.verb;
  msg.verb_gerund = gerundize(gen.verb.verb);
  msg.object_head = text::singularize(k.tree.name(gen.object));

  std::string instrumental_via;
  for (const auto id : self_and_parents(k.tree, gen.object)) {
    const auto name = text::to_lower(k.tree.name(id));
    if (k.rules.instrumental_categories.contains(name)) {
      msg.instrumental = true;
      instrumental_via = name;
      break;
    }
  }

  switch (gen.subject.source) {
    case SubjectSource::TitleKeyword: gen.heuristic_rules_fired.push_back("title_subject:" + gen.subject.rule); break;
    case SubjectSource::CategoryRule: gen.heuristic_rules_fired.push_back("category_subject:" + gen.subject.rule); break;
    default: break;
  }
  if (gen.verb.source == VerbSource::Heuristic) gen.heuristic_rules_fired.push_back(gen.verb.rule);
  if (msg.instrumental) gen.heuristic_rules_fired.push_back("instrumental:" + instrumental_via);
  return gen;
}

std::string render(const KeyMessage& m, int level) {
  if (level < 1 || level > 3) throw Error(Errc::InvalidLevel, "reading level must be 1, 2 or 3, got " + std::to_string(level));
  std::string out = text::to_lower(m.object_head);
  if (level == 1) return out;
  out = text::to_lower(m.verb_gerund) + (m.instrumental ? " with " : " ") + out;
  if (level == 2) return out;
  return text::capitalize(m.subject) + " " + out;
}

}  // namespace simplervoice
