#pragma once

// Deterministic synthetic n-gram corpus used by the scale tests and the
// benchmark. Token frequencies follow a rough Zipf curve so some nouns have
// long posting lists.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace simplervoice::testing {

struct SyntheticOptions {
  std::size_t lines = 100'000;
  std::size_t vocabulary = 20'000;
  std::uint64_t seed = 0x5eed;
  double uppercase_rate = 0.01;  // tokens written with a capital first letter
  double malformed_rate = 0.0;
};

inline std::string synthetic_token(std::size_t i) {
  static const char* kSyllables[] = {"ba", "ke", "ro", "li", "mu", "sa", "te", "no", "pi", "da", "vo", "ge"};
  std::string out;
  std::size_t x = i;
  do {
    out += kSyllables[x % 12];
    x /= 12;
  } while (x > 0);
  return out;
}

inline std::vector<std::string> synthetic_vocabulary(std::size_t n) {
  std::vector<std::string> vocab;
  vocab.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vocab.push_back(synthetic_token(i));
  return vocab;
}

inline std::string synthetic_corpus(const SyntheticOptions& opt) {
  const auto vocab = synthetic_vocabulary(opt.vocabulary);
  std::mt19937_64 rng(opt.seed);
  // Inverse-CDF sampling of a Zipf(1) law over ranks via a precomputed table.
  std::vector<double> cdf(vocab.size());
  double acc = 0.0;
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    acc += 1.0 / static_cast<double>(r + 1);
    cdf[r] = acc;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    const double u = unit(rng) * acc;
    return static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  };

  std::string out;
  out.reserve(opt.lines * 32);
  for (std::size_t line = 0; line < opt.lines; ++line) {
    if (opt.malformed_rate > 0 && unit(rng) < opt.malformed_rate) {
      out += vocab[draw()];
      out += "\tnot-a-count\n";
      continue;
    }
    const auto n = 2 + static_cast<std::size_t>(rng() % 4);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ' ';
      std::string tok = vocab[std::min(draw(), vocab.size() - 1)];
      if (unit(rng) < opt.uppercase_rate) tok[0] = static_cast<char>(tok[0] - 'a' + 'A');
      out += tok;
    }
    out += '\t';
    out += std::to_string(1 + rng() % 1000);
    out += '\n';
  }
  return out;
}

}  // namespace simplervoice::testing
