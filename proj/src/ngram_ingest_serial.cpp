// Reference ingestion: one pass, ordered maps, no shared state. Kept as the
// oracle for the parallel path and as the benchmark baseline.

#include <istream>
#include <map>
#include <set>

#include "simplervoice/ngram.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

NGramIngest ingest_ngrams_serial(std::string_view text) {
  std::map<std::vector<std::string>, Count> merged;
  std::vector<LineIssue> issues;
  std::vector<std::string_view> fields;
  std::size_t line_no = 0;
  std::size_t content_lines = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty()) continue;
    ++content_lines;

    Count count = 0;
    if (auto reason = detail::parse_ngram_line(line, fields, count); !reason.empty()) {
      issues.push_back({line_no, Errc::MalformedLine, std::move(reason)});
      continue;
    }
    std::vector<std::string> key;
    key.reserve(fields.size());
    for (const auto f : fields) key.push_back(text::to_lower(f));
    merged[std::move(key)] += count;
  }
  if (content_lines == 0) throw Error(Errc::EmptyInput, "n-gram input has no lines");

  std::set<std::string> vocab_set;
  for (const auto& [key, _] : merged) vocab_set.insert(key.begin(), key.end());
  std::vector<std::string> vocabulary(vocab_set.begin(), vocab_set.end());
  std::map<std::string_view, TokenId> ids;
  for (std::size_t i = 0; i < vocabulary.size(); ++i) ids.emplace(vocabulary[i], static_cast<TokenId>(i));

  std::vector<std::uint32_t> offsets{0};
  std::vector<TokenId> tokens;
  std::vector<Count> counts;
  for (const auto& [key, count] : merged) {
    for (const auto& tok : key) tokens.push_back(ids.at(tok));
    offsets.push_back(static_cast<std::uint32_t>(tokens.size()));
    counts.push_back(count);
  }
  return {NGramStore(std::move(vocabulary), std::move(offsets), std::move(tokens), std::move(counts)),
          std::move(issues)};
}

NGramIngest ingest_ngrams(std::istream& in, int threads) {
  std::string buffer{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return ingest_ngrams(std::string_view(buffer), threads);
}

}  // namespace simplervoice
