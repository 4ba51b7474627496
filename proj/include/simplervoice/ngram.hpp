#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplervoice/error.hpp"

namespace simplervoice {

using Count = std::uint64_t;
using TokenId = std::uint32_t;

inline constexpr std::size_t kMinNgram = 2;
inline constexpr std::size_t kMaxNgram = 5;
inline constexpr int kDefaultWindow = 2;

struct NGramRecord {
  std::vector<std::string> tokens;
  Count count = 0;

  bool operator==(const NGramRecord&) const = default;
};

// (token, summed count), ordered by count descending then token ascending.
using RankedTokens = std::vector<std::pair<std::string, Count>>;

// Sorts by count descending, ties by token ascending.
void rank(RankedTokens& tokens);

// Frequency index over distinct lowercased token sequences.
//
// Layout is CSR: the vocabulary is sorted, so TokenId order is lexicographic
// order and records (sorted by their id sequences) come out in the same
// order as the sorted string sequences. postings_ lists, per token, the
// records containing it in ascending record order.
class NGramStore {
 public:
  NGramStore() = default;

  // `records` must be sorted and unique by token-id sequence, with ids drawn
  // from `vocabulary` (sorted, unique).
  NGramStore(std::vector<std::string> vocabulary,
             std::vector<std::uint32_t> record_offsets,
             std::vector<TokenId> record_tokens,
             std::vector<Count> counts);

  std::size_t total_records() const noexcept { return counts_.size(); }
  std::size_t vocabulary_size() const noexcept { return vocabulary_.size(); }
  Count total_count() const noexcept;

  NGramRecord record(std::size_t index) const;

  // Tokens found within `window` positions (either side) of `noun` in any
  // record, each record contributing its count once per distinct token.
  // Unknown nouns give an empty list. Throws InvalidConfig for a window
  // outside 1..4.
  RankedTokens collocates(std::string_view noun, int window = kDefaultWindow) const;

  // One "tok tok\tcount" line per record in store order.
  void serialize(std::ostream& out) const;

  bool operator==(const NGramStore&) const = default;

 private:
  std::vector<std::string> vocabulary_;
  std::vector<std::uint32_t> record_offsets_;  // size total_records()+1
  std::vector<TokenId> record_tokens_;
  std::vector<Count> counts_;
  std::vector<std::uint32_t> posting_offsets_;  // size vocabulary_size()+1
  std::vector<std::uint32_t> postings_;
};

struct NGramIngest {
  NGramStore store;
  std::vector<LineIssue> issues;  // malformed lines, ascending line order
};

// Parallel ingestion (OpenMP). `threads` <= 0 uses the OpenMP default.
// Blank lines are ignored; throws EmptyInput when there are no other lines.
NGramIngest ingest_ngrams(std::string_view text, int threads = 0);
NGramIngest ingest_ngrams(std::istream& in, int threads = 0);

// Single-threaded reference with its own parser and an ordered-map merge.
// Produces a store and issue list identical to ingest_ngrams.
NGramIngest ingest_ngrams_serial(std::string_view text);

namespace detail {

// Shared line validator: fills `tokens` (not yet lowercased) and `count`, or
// returns a reason for rejecting the line.
std::string parse_ngram_line(std::string_view line, std::vector<std::string_view>& tokens, Count& count);

}  // namespace detail

}  // namespace simplervoice
