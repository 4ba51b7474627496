#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simplervoice {

enum class Errc {
  EmptyInput,
  MalformedLine,
  DuplicateUpc,
  DuplicateTitle,
  NotFound,
  NotInTree,
  NotALeaf,
  PathConflict,
  EmptyWord,
  NoVerbFound,
  InvalidLevel,
  InvalidConfig,
  EmptyTable,
  ScoreOutOfRange,
  LengthMismatch,
  UnknownProvider,
  Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// A non-fatal problem found while reading a line-oriented input.
struct LineIssue {
  std::size_t line = 0;  // 1-based
  Errc kind = Errc::MalformedLine;
  std::string reason;

  bool operator==(const LineIssue&) const = default;
};

std::string format_issue(std::string_view source, const LineIssue& issue);

}  // namespace simplervoice
