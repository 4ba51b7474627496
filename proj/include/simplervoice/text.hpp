#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace simplervoice::text {

std::string_view trim(std::string_view s) noexcept;

std::string to_lower(std::string_view s);

// Splits on a single-character delimiter, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);

// Splits on runs of ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> split_ws(std::string_view s);

bool is_all_digits(std::string_view s) noexcept;

// Case-folds ASCII, removes ASCII punctuation, collapses whitespace runs to a
// single space and trims. Idempotent.
std::string normalize_title(std::string_view title);

std::string capitalize(std::string_view word);

// Plural -> singular for regular English noun endings; anything else is
// returned unchanged (lowercased).
std::string singularize(std::string_view noun);

// Last whitespace-separated word of a (possibly multi-word) name.
std::string_view head_word(std::string_view name) noexcept;

}  // namespace simplervoice::text
