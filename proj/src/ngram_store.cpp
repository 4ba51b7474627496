#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "simplervoice/ngram.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

void rank(RankedTokens& tokens) {
  std::sort(tokens.begin(), tokens.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
}

NGramStore::NGramStore(std::vector<std::string> vocabulary, std::vector<std::uint32_t> record_offsets,
                       std::vector<TokenId> record_tokens, std::vector<Count> counts)
    : vocabulary_(std::move(vocabulary)),
      record_offsets_(std::move(record_offsets)),
      record_tokens_(std::move(record_tokens)),
      counts_(std::move(counts)) {
  if (record_offsets_.empty()) record_offsets_.push_back(0);

  // Postings: one entry per (token, record) pair, deduplicated within a
  // record. Records are visited in order, so each list is ascending.
  posting_offsets_.assign(vocabulary_.size() + 1, 0);
  auto for_each_distinct = [&](std::size_t r, auto&& fn) {
    const auto begin = record_offsets_[r];
    const auto end = record_offsets_[r + 1];
    for (auto i = begin; i < end; ++i) {
      const auto tok = record_tokens_[i];
      bool seen = false;
      for (auto j = begin; j < i; ++j) seen = seen || record_tokens_[j] == tok;
      if (!seen) fn(tok);
    }
  };
  for (std::size_t r = 0; r < counts_.size(); ++r) {
    for_each_distinct(r, [&](TokenId tok) { ++posting_offsets_[tok + 1]; });
  }
  std::partial_sum(posting_offsets_.begin(), posting_offsets_.end(), posting_offsets_.begin());
  postings_.resize(posting_offsets_.back());
  std::vector<std::uint32_t> cursor(posting_offsets_.begin(), posting_offsets_.end() - 1);
  for (std::size_t r = 0; r < counts_.size(); ++r) {
    for_each_distinct(r, [&](TokenId tok) { postings_[cursor[tok]++] = static_cast<std::uint32_t>(r); });
  }
}

Count NGramStore::total_count() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

NGramRecord NGramStore::record(std::size_t index) const {
  NGramRecord out;
  for (auto i = record_offsets_.at(index); i < record_offsets_.at(index + 1); ++i) {
    out.tokens.push_back(vocabulary_[record_tokens_[i]]);
  }
  out.count = counts_[index];
  return out;
}

RankedTokens NGramStore::collocates(std::string_view noun, int window) const {
  if (window < 1 || window > static_cast<int>(kMaxNgram) - 1) {
    throw Error(Errc::InvalidConfig, "collocate window must be in 1..4, got " + std::to_string(window));
  }
  const auto key = text::to_lower(noun);
  const auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), key);
  if (it == vocabulary_.end() || *it != key) return {};
  const auto target = static_cast<TokenId>(it - vocabulary_.begin());

  std::unordered_map<TokenId, Count> sums;
  for (auto p = posting_offsets_[target]; p < posting_offsets_[target + 1]; ++p) {
    const auto r = postings_[p];
    const auto begin = record_offsets_[r];
    const auto len = static_cast<int>(record_offsets_[r + 1] - begin);
    const TokenId* toks = record_tokens_.data() + begin;

    bool near[kMaxNgram] = {};
    for (int i = 0; i < len; ++i) {
      if (toks[i] != target) continue;
      for (int j = std::max(0, i - window); j <= std::min(len - 1, i + window); ++j) near[j] = true;
    }
    TokenId taken[kMaxNgram];
    int n_taken = 0;
    for (int j = 0; j < len; ++j) {
      if (!near[j] || toks[j] == target) continue;
      if (std::find(taken, taken + n_taken, toks[j]) != taken + n_taken) continue;
      taken[n_taken++] = toks[j];
      sums[toks[j]] += counts_[r];
    }
  }

  RankedTokens out;
  out.reserve(sums.size());
  for (const auto& [tok, count] : sums) out.emplace_back(vocabulary_[tok], count);
  rank(out);
  return out;
}

void NGramStore::serialize(std::ostream& out) const {
  for (std::size_t r = 0; r < counts_.size(); ++r) {
    for (auto i = record_offsets_[r]; i < record_offsets_[r + 1]; ++i) {
      if (i != record_offsets_[r]) out << ' ';
      out << vocabulary_[record_tokens_[i]];
    }
    out << '\t' << counts_[r] << '\n';
  }
}

namespace detail {

std::string parse_ngram_line(std::string_view line, std::vector<std::string_view>& tokens, Count& count) {
  tokens.clear();
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos) return "missing tab before count";
  if (line.find('\t', tab + 1) != std::string_view::npos) return "more than one tab";

  const auto count_field = text::trim(line.substr(tab + 1));
  if (!text::is_all_digits(count_field)) return "count is not a positive integer";
  const auto [ptr, ec] = std::from_chars(count_field.data(), count_field.data() + count_field.size(), count);
  if (ec != std::errc{} || ptr != count_field.data() + count_field.size()) return "count out of range";
  if (count == 0) return "count must be at least 1";

  for (const auto tok : text::split_ws(line.substr(0, tab))) {
    if (tokens.size() == kMaxNgram) return "more than 5 tokens";
    tokens.push_back(tok);
  }
  if (tokens.size() < kMinNgram) return "fewer than 2 tokens";
  return {};
}

}  // namespace detail
}  // namespace simplervoice
