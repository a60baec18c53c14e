#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "revtk/extraction.hpp"

namespace {

revtk::ParsedPaper synthetic_paper(std::size_t sentences) {
  static const std::vector<std::string> vocab = {
      "graph",  "model",  "training", "sparse", "attention", "layers",
      "memory", "results", "datasets", "method", "entropy",  "analysis"};
  std::mt19937_64 rng(11);
  std::vector<std::string> body;
  for (std::size_t s = 0; s < sentences; ++s) {
    std::string sentence = "propose";
    for (int w = 0; w < 12; ++w) {
      sentence += ' ';
      sentence += vocab[rng() % vocab.size()];
    }
    body.push_back(std::move(sentence));
  }
  revtk::ParsedPaper paper;
  paper.id = "bench";
  paper.sections.push_back({"Body", std::move(body)});
  return paper;
}

void BM_KeywordFilter(benchmark::State& state) {
  const auto paper = synthetic_paper(state.range(0));
  const auto& keywords = revtk::default_keywords();
  for (auto _ : state) {
    benchmark::DoNotOptimize(revtk::keyword_filter(paper, keywords));
  }
}
BENCHMARK(BM_KeywordFilter)->Arg(100)->Arg(250);

void BM_CeExtract(benchmark::State& state) {
  const auto paper = synthetic_paper(state.range(0));
  const std::vector<std::string> keywords = {"propose"};
  revtk::CEConfig config;
  config.sample_count = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(revtk::ce_extract(paper, config, keywords));
  }
}
BENCHMARK(BM_CeExtract)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
