#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "revtk/rouge.hpp"

namespace {

std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t n) {
  static const std::vector<std::string> vocab = {
      "the", "model", "is", "trained", "on", "data", "results", "show",
      "gains", "over", "baseline", "methods", "for", "long", "documents"};
  std::vector<std::string> tokens(n);
  for (auto& token : tokens) token = vocab[rng() % vocab.size()];
  return tokens;
}

void BM_RougeN(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto cand = random_tokens(rng, state.range(0));
  const auto ref = random_tokens(rng, state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(revtk::rouge_n(cand, ref, n));
  }
}
BENCHMARK(BM_RougeN)->Args({100, 1})->Args({100, 2})->Args({1000, 1})->Args({1000, 2});

void BM_RougeL(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto cand = random_tokens(rng, state.range(0));
  const auto ref = random_tokens(rng, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(revtk::rouge_l(cand, ref));
  }
}
BENCHMARK(BM_RougeL)->Arg(100)->Arg(400)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
