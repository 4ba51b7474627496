#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "simplervoice/ngram.hpp"
#include "synthetic_ngrams.hpp"

using namespace simplervoice;

namespace {

RankedTokens as_ranked(const std::vector<std::pair<std::string, std::uint64_t>>& v) {
  return RankedTokens(v.begin(), v.end());
}

}  // namespace

TEST_CASE("two lines give two records", "[ngram]") {
  const auto result = ingest_ngrams("eaten a bagel\t120\ntoasted bagel\t80\n");
  CHECK(result.issues.empty());
  REQUIRE(result.store.total_records() == 2);
  CHECK(result.store.total_count() == 200);
  CHECK(result.store.record(0) == NGramRecord{{"eaten", "a", "bagel"}, 120});
  CHECK(result.store.record(1) == NGramRecord{{"toasted", "bagel"}, 80});
  CHECK(result.store.vocabulary_size() == 4);
}

TEST_CASE("duplicate sequences are summed", "[ngram]") {
  const auto result = ingest_ngrams("toasted bagel\t10\nToasted  BAGEL\t5\n");
  REQUIRE(result.store.total_records() == 1);
  CHECK(result.store.record(0).count == 15);
}

TEST_CASE("malformed lines are reported and skipped", "[ngram]") {
  const std::string text =
      "toasted bagel\t10\n"
      "bagel\t3\n"                 // too short
      "a b c d e f\t3\n"           // too long
      "toasted bagel\t0\n"         // zero count
      "toasted bagel\tx\n"         // not a number
      "toasted bagel 4\n"          // no tab
      "a\tb\t3\n"                  // two tabs
      "\n"
      "eat bagel\t7\n";
  const auto result = ingest_ngrams(text);
  CHECK(result.store.total_records() == 2);
  REQUIRE(result.issues.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(result.issues[i].line == i + 2);
    CHECK(result.issues[i].kind == Errc::MalformedLine);
  }
}

TEST_CASE("empty corpus is an error", "[ngram]") {
  CHECK_THROWS_AS(ingest_ngrams(""), Error);
  CHECK_THROWS_AS(ingest_ngrams("\n\n"), Error);
  CHECK_THROWS_AS(ingest_ngrams_serial(""), Error);
}

TEST_CASE("parallel and serial ingestion agree", "[ngram][property]") {
  testing::SyntheticOptions opt;
  opt.lines = 20'000;
  opt.vocabulary = 500;
  opt.malformed_rate = 0.01;
  opt.uppercase_rate = 0.2;
  const auto text = testing::synthetic_corpus(opt);
  const auto serial = ingest_ngrams_serial(text);
  for (int threads : {1, 2, 3, 8}) {
    const auto parallel = ingest_ngrams(text, threads);
    CHECK(parallel.store == serial.store);
    CHECK(parallel.issues == serial.issues);
  }
  CHECK_FALSE(serial.issues.empty());
}

TEST_CASE("parallel ingestion handles tiny and unterminated inputs", "[ngram]") {
  for (const std::string text : {"a b\t1", "a b\t1\r\n", "x y\t2\n\n\na b\t1"}) {
    for (int threads : {1, 4, 16}) {
      const auto p = ingest_ngrams(text, threads);
      const auto s = ingest_ngrams_serial(text);
      CHECK(p.store == s.store);
      CHECK(p.issues == s.issues);
    }
  }
}

TEST_CASE("collocates over the fixture", "[ngram][fixture]") {
  const auto& store = testing::fixture_workspace().ngrams;
  const auto bagel = store.collocates("bagel");
  auto count_of = [&](std::string_view tok) -> Count {
    for (const auto& [t, c] : bagel) {
      if (t == tok) return c;
    }
    return 0;
  };
  CHECK(count_of("eaten") == 120);
  CHECK(count_of("toasted") == 105);
  CHECK(count_of("are") == 30);
  CHECK(store.collocates("unobtainium").empty());
}

TEST_CASE("ties break lexicographically", "[ngram]") {
  const auto store = ingest_ngrams("zeta noun\t5\nalpha noun\t5\nmid noun\t9\nnoun beta\t5\n").store;
  CHECK(store.collocates("noun") ==
        RankedTokens{{"mid", 9}, {"alpha", 5}, {"beta", 5}, {"zeta", 5}});
}

TEST_CASE("window bounds", "[ngram]") {
  const auto store = ingest_ngrams("a b c d noun\t1\n").store;
  CHECK(store.collocates("noun", 1) == RankedTokens{{"d", 1}});
  CHECK(store.collocates("noun", 2) == RankedTokens{{"c", 1}, {"d", 1}});
  CHECK(store.collocates("noun", 4).size() == 4);
  CHECK_THROWS_AS(store.collocates("noun", 0), Error);
  CHECK_THROWS_AS(store.collocates("noun", 5), Error);
}

TEST_CASE("a record counts once per distinct nearby token", "[ngram]") {
  const auto store = ingest_ngrams("noun x noun\t4\nnoun noun\t2\n").store;
  CHECK(store.collocates("noun") == RankedTokens{{"x", 4}});
}

TEST_CASE("collocates match a brute-force scan", "[ngram][property]") {
  testing::SyntheticOptions opt;
  opt.lines = 30'000;
  opt.vocabulary = 300;
  opt.seed = 99;
  const auto text = testing::synthetic_corpus(opt);
  const auto store = ingest_ngrams(text).store;
  const testing::CollocateOracle oracle(text);
  CHECK(store.total_count() == oracle.total_count());

  std::mt19937 rng(3);
  for (int q = 0; q < 200; ++q) {
    const auto noun = testing::synthetic_token(rng() % 320);
    const int window = 1 + static_cast<int>(rng() % 4);
    CHECK(store.collocates(noun, window) == as_ranked(oracle.query(noun, window)));
  }
}

TEST_CASE("serialize round-trips", "[ngram]") {
  const auto& store = testing::fixture_workspace().ngrams;
  std::ostringstream out;
  store.serialize(out);
  CHECK(ingest_ngrams(out.str()).store == store);
}
