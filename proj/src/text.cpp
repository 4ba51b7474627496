#include "simplervoice/text.hpp"
#include "simplervoice/error.hpp"

#include <cctype>

namespace simplervoice {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::DuplicateUpc: return "DuplicateUpc";
    case Errc::DuplicateTitle: return "DuplicateTitle";
    case Errc::NotFound: return "NotFound";
    case Errc::NotInTree: return "NotInTree";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::PathConflict: return "PathConflict";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::NoVerbFound: return "NoVerbFound";
    case Errc::InvalidLevel: return "InvalidLevel";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::ScoreOutOfRange: return "ScoreOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::UnknownProvider: return "UnknownProvider";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

std::string format_issue(std::string_view source, const LineIssue& issue) {
  std::string out(source);
  out += ':';
  out += std::to_string(issue.line);
  out += ": ";
  out += to_string(issue.kind);
  out += ": ";
  out += issue.reason;
  return out;
}

namespace text {

namespace {

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char lower(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool ends_with(std::string_view s, std::string_view suffix) noexcept {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower(c);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool is_all_digits(std::string_view s) noexcept {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string normalize_title(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  bool pending_space = false;
  for (char c : title) {
    const auto u = static_cast<unsigned char>(c);
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (u < 0x80 && std::ispunct(u)) continue;
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += lower(c);
  }
  return out;
}

std::string capitalize(std::string_view word) {
  std::string out = to_lower(word);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

std::string singularize(std::string_view noun) {
  std::string w = to_lower(noun);
  if (w.size() <= 3) return w;
  if (ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "sses") || ends_with(w, "ches") || ends_with(w, "shes") ||
      ends_with(w, "xes") || ends_with(w, "zes") || ends_with(w, "oes")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return w;
  if (w.back() == 's') return w.substr(0, w.size() - 1);
  return w;
}

std::string_view head_word(std::string_view name) noexcept {
  name = trim(name);
  std::size_t i = name.size();
  while (i > 0 && !is_space(name[i - 1])) --i;
  return name.substr(i);
}

}  // namespace text
}  // namespace simplervoice
