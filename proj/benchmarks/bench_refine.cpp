#include <benchmark/benchmark.h>

#include <random>

#include "revtk/refine.hpp"

namespace {

revtk::LabeledReview random_review(std::size_t tokens) {
  static const std::vector<std::string> words = {
      "the", "paper", "is", "clear", "results", ".", ",", "strong", "novel",
      "method", "weak", "baselines"};
  static const std::vector<std::string> codes = {
      "O", "summary", "+clarity", "-clarity", "+substance", "-substance",
      "+originality", "-comparison"};
  std::mt19937_64 rng(3);
  revtk::LabeledReview review;
  review.review_id = "bench";
  review.paper_id = "bench";
  std::string code = "O";
  for (std::size_t i = 0; i < tokens; ++i) {
    review.tokens.push_back(words[rng() % words.size()]);
    if (rng() % 5 == 0) code = codes[rng() % codes.size()];
    review.labels.push_back(revtk::TokenLabel::from_code(code));
  }
  return review;
}

void BM_Refine(benchmark::State& state) {
  const auto review = random_review(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(revtk::refine(review));
  }
}
BENCHMARK(BM_Refine)->Arg(100)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
