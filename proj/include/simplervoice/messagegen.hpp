#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "simplervoice/catalog.hpp"
#include "simplervoice/lexicon.hpp"
#include "simplervoice/ngram.hpp"
#include "simplervoice/ontology.hpp"

namespace simplervoice {

// Category- and title-driven defaults.
struct HeuristicRules {
  std::map<std::string, std::string> category_verb;     // food -> eat
  std::map<std::string, std::string> category_subject;  // baby -> Baby
  std::map<std::string, std::string> title_subject;     // women -> Woman
  std::set<std::string> instrumental_categories;        // categories rendered with "with"

  // Sections: category_verb, category_subject, title_subject, instrumental.
  static HeuristicRules parse(std::istream& in, std::string_view source = "rules");
  void serialize(std::ostream& out) const;

  bool operator==(const HeuristicRules&) const = default;
};

// Low-information verbs removed after disambiguation.
struct FilterList {
  std::set<std::string> restricted_verbs;

  bool contains(std::string_view verb) const { return restricted_verbs.contains(std::string(verb)); }

  // One verb per line, '#' comments allowed. Throws InvalidConfig when empty.
  static FilterList parse(std::istream& in, std::string_view source = "filter");
  void serialize(std::ostream& out) const;

  bool operator==(const FilterList&) const = default;
};

// Which rung of the disambiguation ladder produced the result.
enum class FallbackRung {
  ObjectParentsNeighbors,  // V(O) ∩ V(P) ∩ V(N) \ F
  ObjectParents,           // V(O) ∩ V(P) \ F
  ObjectOnly,              // V(O) \ F
  Empty,
};

std::string_view to_string(FallbackRung rung) noexcept;

struct Disambiguation {
  VerbSet verbs;  // ranked by the object's counts
  FallbackRung rung = FallbackRung::Empty;
};

// Intersects the object's verbs with its context, drops restricted verbs and
// falls back to narrower contexts while the result is empty.
Disambiguation disambiguate_verbs(const VerbSet& object, const VerbSet& parents, const VerbSet& neighbors,
                                  const FilterList& filter);

// Everything message generation reads. All members are borrowed.
struct Knowledge {
  const OntologyTree& tree;
  const NGramStore& store;
  const Lexicon& lexicon;
  const HeuristicRules& rules;
  const FilterList& filter;
  int window = kDefaultWindow;
};

enum class VerbSource { NGram, Heuristic };

struct VerbChoice {
  std::string verb;
  VerbSource source = VerbSource::NGram;
  Disambiguation disambiguation;
  VerbSet object_verbs;
  VerbSet parent_verbs;
  VerbSet neighbor_verbs;
  std::string rule;  // "category_verb:<category>" when a heuristic decided
};

// Throws NoVerbFound when neither the n-gram ladder nor any heuristic yields
// a verb, NotInTree when the record is not in the tree.
VerbChoice choose_verb(const ProductRecord& record, const Knowledge& knowledge);

enum class SubjectSource { TitleKeyword, CategoryRule, Pronoun, Default };

struct SubjectChoice {
  std::string subject;
  SubjectSource source = SubjectSource::Default;
  std::string rule;  // the keyword, category or pronoun that decided
};

inline constexpr std::string_view kDefaultSubject = "Person";
inline constexpr std::string_view kTieSubject = "Woman";

SubjectChoice choose_subject(const ProductRecord& record, NodeId object, const Knowledge& knowledge);

// -ing form: irregular table, final-e drop, CVC doubling, else +ing.
// Throws EmptyWord.
std::string gerundize(std::string_view verb);

struct KeyMessage {
  std::string subject;      // capitalized
  std::string verb_base;
  std::string verb_gerund;
  bool instrumental = false;
  std::string object_head;  // singular, lowercase

  bool operator==(const KeyMessage&) const = default;
};

struct Generation {
  KeyMessage message;
  NodeId object = 0;
  VerbChoice verb;
  SubjectChoice subject;
  std::vector<std::string> heuristic_rules_fired;
};

Generation generate_key_message(const ProductRecord& record, const Knowledge& knowledge);

// Level 1: object; level 2: gerund (with) object; level 3: subject + level 2.
// Throws InvalidLevel.
std::string render(const KeyMessage& message, int level);

}  // namespace simplervoice
