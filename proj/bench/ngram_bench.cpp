// Serial reference vs OpenMP ingestion, and collocate query latency.
//
//   ./build/bench/ngram_bench --benchmark_filter=Ingest

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>
#include <string>

#include "simplervoice/ngram.hpp"
#include "synthetic_ngrams.hpp"

namespace sv = simplervoice;

namespace {

const std::string& corpus(std::size_t lines) {
  static std::map<std::size_t, std::string> cache;
  auto& text = cache[lines];
  if (text.empty()) text = sv::testing::synthetic_corpus({.lines = lines});
  return text;
}

void BM_IngestSerial(benchmark::State& state) {
  const auto& text = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto result = sv::ingest_ngrams_serial(text);
    benchmark::DoNotOptimize(result.store.total_records());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}

void BM_IngestParallel(benchmark::State& state) {
  const auto& text = corpus(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto result = sv::ingest_ngrams(text, threads);
    benchmark::DoNotOptimize(result.store.total_records());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}

void BM_Collocates(benchmark::State& state) {
  static const auto store = sv::ingest_ngrams(corpus(1'000'000)).store;
  const auto noun = sv::testing::synthetic_token(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(store.collocates(noun, 2));
}

}  // namespace

BENCHMARK(BM_IngestSerial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IngestParallel)
    ->ArgsProduct({{100'000, 1'000'000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond);
// Rank 0 is the most frequent token; higher ranks have shorter posting lists.
BENCHMARK(BM_Collocates)->Arg(0)->Arg(10)->Arg(1000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
