#include "simplervoice/lexicon.hpp"

#include <algorithm>
#include <ostream>

#include "simplervoice/sections.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

namespace {

[[noreturn]] void config_error(std::string_view source, std::size_t line, const std::string& what) {
  throw Error(Errc::InvalidConfig, std::string(source) + ":" + std::to_string(line) + ": " + what);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// consonant-vowel-consonant ending, last consonant not w/x/y
bool ends_cvc(std::string_view w) {
  if (w.size() < 3) return false;
  const char a = w[w.size() - 3], b = w[w.size() - 2], c = w[w.size() - 1];
  return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' && c != 'x' && c != 'y';
}

bool ends_double_consonant(std::string_view w) {
  if (w.size() < 2) return false;
  const char a = w[w.size() - 2], b = w[w.size() - 1];
  return a == b && !is_vowel(b);
}

// Base candidate after stripping an -ing/-ed/-en style suffix.
std::string restore(const Lexicon& lex, std::string base) {
  const bool known = lex.verbs.contains(base);
  const bool known_e = lex.verbs.contains(base + "e");
  if (ends_cvc(base) && known_e) return base + "e";  // hoping -> hope
  if (known) return base;
  if (known_e) return base + "e";                    // baking -> bake
  if (ends_double_consonant(base)) {
    auto undoubled = base.substr(0, base.size() - 1);
    if (lex.verbs.contains(undoubled)) return undoubled;  // running -> run
  }
  return {};
}

// Rule-only fallback for words whose base is not in the verb list.
std::string strip_plain(std::string base) {
  if (ends_double_consonant(base) && base.back() != 'l' && base.back() != 's' && base.back() != 'z') {
    base.pop_back();
  }
  return base;
}

}  // namespace

Lexicon Lexicon::parse(std::istream& in, std::string_view source) {
  const auto sections = read_sections(in, source, {"verbs", "pronouns", "irregulars", "subject_nouns"});
  Lexicon lex;
  auto section = [&](const char* name) -> const std::vector<SectionLine>& {
    static const std::vector<SectionLine> none;
    const auto it = sections.find(name);
    return it == sections.end() ? none : it->second;
  };
  auto single_word = [&](const SectionLine& l) {
    const auto w = text::to_lower(l.text);
    if (w.find_first_of(" \t") != std::string::npos) config_error(source, l.line, "expected a single word");
    return w;
  };
  auto mapping = [&](const SectionLine& l) {
    auto m = split_mapping(l.text);
    if (!m) config_error(source, l.line, "expected 'word -> word'");
    return std::pair{text::to_lower(m->first), text::to_lower(m->second)};
  };

  for (const auto& l : section("verbs")) lex.verbs.insert(single_word(l));
  for (const auto& l : section("subject_nouns")) lex.subject_nouns.insert(single_word(l));
  for (const auto& l : section("irregulars")) {
    auto [from, to] = mapping(l);
    if (!lex.verbs.contains(to)) config_error(source, l.line, "irregular base '" + to + "' is not a listed verb");
    lex.irregular_forms[from] = to;
  }
  for (const auto& l : section("pronouns")) {
    auto [from, to] = mapping(l);
    if (!lex.subject_nouns.contains(to)) {
      config_error(source, l.line, "pronoun subject '" + to + "' is not a listed subject noun");
    }
    lex.pronouns[from] = to;
  }
  return lex;
}

void Lexicon::serialize(std::ostream& out) const {
  out << "verbs:\n";
  for (const auto& v : verbs) out << v << '\n';
  out << "\nsubject_nouns:\n";
  for (const auto& s : subject_nouns) out << s << '\n';
  out << "\npronouns:\n";
  for (const auto& [p, s] : pronouns) out << p << " -> " << s << '\n';
  out << "\nirregulars:\n";
  for (const auto& [f, b] : irregular_forms) out << f << " -> " << b << '\n';
}

bool VerbSet::contains(std::string_view verb) const {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == verb; });
}

Count VerbSet::count_of(std::string_view verb) const {
  for (const auto& [v, c] : entries) {
    if (v == verb) return c;
  }
  return 0;
}

std::set<std::string> VerbSet::names() const {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(e.first);
  return out;
}

VerbSet VerbSet::from_counts(const std::map<std::string, Count>& counts) {
  VerbSet out;
  out.entries.assign(counts.begin(), counts.end());
  rank(out.entries);
  return out;
}

VerbSet VerbSet::merge(const std::vector<VerbSet>& sets) {
  std::map<std::string, Count> counts;
  for (const auto& s : sets) {
    for (const auto& [v, c] : s.entries) counts[v] += c;
  }
  return from_counts(counts);
}

std::string stem(const Lexicon& lex, std::string_view word) {
  const auto w = text::to_lower(text::trim(word));
  if (w.empty()) throw Error(Errc::EmptyWord, "cannot stem an empty word");
  if (const auto it = lex.irregular_forms.find(w); it != lex.irregular_forms.end()) return it->second;
  if (lex.verbs.contains(w)) return w;

  auto strip = [&](std::size_t n) { return w.substr(0, w.size() - n); };

  if (ends_with(w, "ing") && w.size() > 4) {
    if (auto b = restore(lex, strip(3)); !b.empty()) return b;
    return strip_plain(strip(3));
  }
  if (ends_with(w, "ied") && w.size() > 4) return strip(3) + "y";
  if (ends_with(w, "ed") && w.size() > 3) {
    if (lex.verbs.contains(strip(1))) return strip(1);  // baked -> bake
    if (auto b = restore(lex, strip(2)); !b.empty()) return b;
    return strip_plain(strip(2));
  }
  if (ends_with(w, "en") && w.size() > 4) {
    if (auto b = restore(lex, strip(2)); !b.empty()) return b;
    return strip_plain(strip(2));
  }
  if (ends_with(w, "ies") && w.size() > 4) return strip(3) + "y";
  if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 3) {
    if (lex.verbs.contains(strip(1))) return strip(1);
    if (ends_with(w, "es") && lex.verbs.contains(strip(2))) return strip(2);  // washes -> wash
    if (ends_with(w, "shes") || ends_with(w, "ches") || ends_with(w, "xes") || ends_with(w, "sses")) {
      return strip(2);
    }
    return strip(1);
  }
  return w;
}

VerbSet verbs_for(const NGramStore& store, const Lexicon& lexicon, std::string_view noun, int window) {
  std::map<std::string, Count> counts;
  for (const auto& [token, count] : store.collocates(noun, window)) {
    auto base = stem(lexicon, token);
    if (lexicon.verbs.contains(base)) counts[std::move(base)] += count;
  }
  return VerbSet::from_counts(counts);
}

RankedTokens pronouns_for(const NGramStore& store, const Lexicon& lexicon, std::string_view noun, int window) {
  RankedTokens out;
  for (const auto& entry : store.collocates(noun, window)) {
    if (lexicon.pronouns.contains(entry.first)) out.push_back(entry);
  }
  rank(out);
  return out;
}

}  // namespace simplervoice
