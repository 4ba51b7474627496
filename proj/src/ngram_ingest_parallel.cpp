// Parallel ingestion. The input is cut into line-aligned chunks; every stage
// that touches all lines (lowercasing, parsing, id mapping, sorting) runs per
// chunk under OpenMP. Token ids come from the sorted global vocabulary and
// records are merged in sorted order, so the result does not depend on the
// thread count.

#include <omp.h>

#include <algorithm>
#include <array>
#include <unordered_map>

#include "simplervoice/ngram.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

namespace {

struct Key {
  std::array<TokenId, kMaxNgram> ids{};
  std::uint8_t len = 0;

  bool operator<(const Key& o) const noexcept {
    const auto n = std::min(len, o.len);
    for (std::uint8_t i = 0; i < n; ++i) {
      if (ids[i] != o.ids[i]) return ids[i] < o.ids[i];
    }
    return len < o.len;
  }
  bool operator==(const Key& o) const noexcept {
    return len == o.len && std::equal(ids.begin(), ids.begin() + len, o.ids.begin());
  }
};

struct Entry {
  Key key;
  Count count;
};

struct ParsedLine {
  std::uint32_t first_token;  // into Chunk::tokens
  std::uint8_t n_tokens;
  Count count;
};

struct Chunk {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t lines = 0;  // newline-terminated or final partial line
  std::size_t content_lines = 0;
  std::vector<std::string_view> tokens;
  std::vector<ParsedLine> parsed;
  std::vector<LineIssue> issues;  // line numbers local to the chunk
  std::vector<std::string_view> vocab;
  std::vector<Entry> entries;
};

char lower(char c) noexcept { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::vector<Chunk> split_chunks(std::string_view text, std::size_t n) {
  std::vector<Chunk> chunks;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < n && begin < text.size(); ++i) {
    std::size_t end = (i + 1 == n) ? text.size() : std::max(begin, text.size() * (i + 1) / n);
    if (end < text.size()) {
      const auto nl = text.find('\n', end);
      end = nl == std::string_view::npos ? text.size() : nl + 1;
    }
    if (end <= begin) continue;
    Chunk c;
    c.begin = begin;
    c.end = end;
    chunks.push_back(std::move(c));
    begin = end;
  }
  return chunks;
}

void parse_chunk(std::string_view text, Chunk& c) {
  std::vector<std::string_view> fields;
  std::size_t pos = c.begin;
  while (pos < c.end) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos || nl >= c.end) nl = c.end;
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++c.lines;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty()) continue;
    ++c.content_lines;

    Count count = 0;
    if (auto reason = detail::parse_ngram_line(line, fields, count); !reason.empty()) {
      c.issues.push_back({c.lines, Errc::MalformedLine, std::move(reason)});
      continue;
    }
    c.parsed.push_back({static_cast<std::uint32_t>(c.tokens.size()), static_cast<std::uint8_t>(fields.size()), count});
    c.tokens.insert(c.tokens.end(), fields.begin(), fields.end());
  }
  c.vocab = c.tokens;
  std::sort(c.vocab.begin(), c.vocab.end());
  c.vocab.erase(std::unique(c.vocab.begin(), c.vocab.end()), c.vocab.end());
}

// Sorts and sums duplicate keys in place.
void collapse(std::vector<Entry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (out > 0 && entries[out - 1].key == entries[i].key) {
      entries[out - 1].count += entries[i].count;
    } else {
      entries[out++] = entries[i];
    }
  }
  entries.resize(out);
}

std::vector<Entry> merge_collapsed(std::vector<Entry>&& a, std::vector<Entry>&& b) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].key, a[i].count + b[j].count});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NGramIngest ingest_ngrams(std::string_view input, int threads) {
  const int n_threads = threads > 0 ? threads : omp_get_max_threads();

  std::string buffer(input);
  const auto size = static_cast<std::int64_t>(buffer.size());
#pragma omp parallel for num_threads(n_threads) schedule(static)
  for (std::int64_t i = 0; i < size; ++i) buffer[i] = lower(buffer[i]);
  const std::string_view text(buffer);

  // Several chunks per thread keeps the sort stage balanced.
  auto chunks = split_chunks(text, static_cast<std::size_t>(n_threads) * 4);
  const auto n_chunks = static_cast<std::int64_t>(chunks.size());

#pragma omp parallel for num_threads(n_threads) schedule(dynamic)
  for (std::int64_t i = 0; i < n_chunks; ++i) parse_chunk(text, chunks[i]);

  std::size_t content_lines = 0;
  std::vector<LineIssue> issues;
  std::size_t line_base = 0;
  std::vector<std::string_view> all_vocab;
  for (auto& c : chunks) {
    content_lines += c.content_lines;
    for (auto& issue : c.issues) {
      issue.line += line_base;
      issues.push_back(std::move(issue));
    }
    line_base += c.lines;
    all_vocab.insert(all_vocab.end(), c.vocab.begin(), c.vocab.end());
  }
  if (content_lines == 0) throw Error(Errc::EmptyInput, "n-gram input has no lines");

  std::sort(all_vocab.begin(), all_vocab.end());
  all_vocab.erase(std::unique(all_vocab.begin(), all_vocab.end()), all_vocab.end());
  std::unordered_map<std::string_view, TokenId> ids;
  ids.reserve(all_vocab.size() * 2);
  for (std::size_t i = 0; i < all_vocab.size(); ++i) ids.emplace(all_vocab[i], static_cast<TokenId>(i));

#pragma omp parallel for num_threads(n_threads) schedule(dynamic)
  for (std::int64_t i = 0; i < n_chunks; ++i) {
    auto& c = chunks[i];
    c.entries.reserve(c.parsed.size());
    for (const auto& line : c.parsed) {
      Entry e{{}, line.count};
      e.key.len = line.n_tokens;
      for (std::uint8_t t = 0; t < line.n_tokens; ++t) e.key.ids[t] = ids.find(c.tokens[line.first_token + t])->second;
      c.entries.push_back(e);
    }
    collapse(c.entries);
    c.tokens = {};
    c.parsed = {};
  }

  // Pairwise merge rounds.
  std::vector<std::vector<Entry>> runs;
  runs.reserve(chunks.size());
  for (auto& c : chunks) runs.push_back(std::move(c.entries));
  while (runs.size() > 1) {
    const auto pairs = static_cast<std::int64_t>(runs.size() / 2);
    std::vector<std::vector<Entry>> next(static_cast<std::size_t>(pairs) + runs.size() % 2);
#pragma omp parallel for num_threads(n_threads) schedule(dynamic)
    for (std::int64_t p = 0; p < pairs; ++p) {
      next[p] = merge_collapsed(std::move(runs[2 * p]), std::move(runs[2 * p + 1]));
    }
    if (runs.size() % 2) next.back() = std::move(runs.back());
    runs = std::move(next);
  }
  const std::vector<Entry> merged = runs.empty() ? std::vector<Entry>{} : std::move(runs.front());

  std::vector<std::string> vocabulary(all_vocab.begin(), all_vocab.end());
  std::vector<std::uint32_t> offsets(merged.size() + 1, 0);
  for (std::size_t r = 0; r < merged.size(); ++r) offsets[r + 1] = offsets[r] + merged[r].key.len;
  std::vector<TokenId> tokens(offsets.back());
  std::vector<Count> counts(merged.size());
  const auto n_records = static_cast<std::int64_t>(merged.size());
#pragma omp parallel for num_threads(n_threads) schedule(static)
  for (std::int64_t r = 0; r < n_records; ++r) {
    std::copy_n(merged[r].key.ids.begin(), merged[r].key.len, tokens.begin() + offsets[r]);
    counts[r] = merged[r].count;
  }
  return {NGramStore(std::move(vocabulary), std::move(offsets), std::move(tokens), std::move(counts)),
          std::move(issues)};
}

}  // namespace simplervoice
