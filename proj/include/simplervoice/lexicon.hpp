#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "simplervoice/ngram.hpp"

namespace simplervoice {

// Word lists used to pick verbs and pronouns out of collocate lists.
struct Lexicon {
  std::set<std::string> verbs;                         // base forms
  std::map<std::string, std::string> pronouns;         // she -> woman
  std::map<std::string, std::string> irregular_forms;  // eaten -> eat
  std::set<std::string> subject_nouns;

  // Sections: verbs, pronouns, irregulars, subject_nouns. Entries are
  // lowercased. Throws InvalidConfig on malformed entries or when an
  // irregular maps outside `verbs` / a pronoun maps outside `subject_nouns`.
  static Lexicon parse(std::istream& in, std::string_view source = "lexicon");
  void serialize(std::ostream& out) const;

  bool operator==(const Lexicon&) const = default;
};

// Ranked list of base verbs with aggregate counts.
struct VerbSet {
  RankedTokens entries;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
  bool contains(std::string_view verb) const;
  Count count_of(std::string_view verb) const;  // 0 when absent
  std::set<std::string> names() const;

  // Sums counts per verb and ranks the result.
  static VerbSet from_counts(const std::map<std::string, Count>& counts);
  // Union of several sets, counts summed.
  static VerbSet merge(const std::vector<VerbSet>& sets);

  bool operator==(const VerbSet&) const = default;
};

// Base form of an inflected word: irregular table, then the word itself if
// it is a known verb, then suffix rules (-ing, -ed, -en, -es, -s) that prefer
// candidates found in the verb list. Throws EmptyWord.
std::string stem(const Lexicon& lexicon, std::string_view word);

// Collocates of `noun` whose stem is a known verb, counts summed per stem.
VerbSet verbs_for(const NGramStore& store, const Lexicon& lexicon, std::string_view noun,
                  int window = kDefaultWindow);

// Collocates of `noun` that are known pronouns, ranked.
RankedTokens pronouns_for(const NGramStore& store, const Lexicon& lexicon, std::string_view noun,
                          int window = kDefaultWindow);

}  // namespace simplervoice
