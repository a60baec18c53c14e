#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revtk/aspect.hpp"
#include "revtk/paper.hpp"
#include "revtk/review.hpp"
#include "support/oracles.hpp"

using namespace revtk;

TEST_CASE("label alphabet has 16 members") {
  std::vector<TokenLabel> alphabet;
  alphabet.push_back(TokenLabel::outside());
  alphabet.push_back(TokenLabel::tagged(Aspect::Summary, Polarity::None));
  for (Aspect aspect : kPolarAspects) {
    alphabet.push_back(TokenLabel::tagged(aspect, Polarity::Positive));
    alphabet.push_back(TokenLabel::tagged(aspect, Polarity::Negative));
  }
  CHECK(alphabet.size() == 16);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    for (std::size_t j = 0; j < alphabet.size(); ++j) {
      CHECK((alphabet[i] == alphabet[j]) == (i == j));
    }
    // code round-trip
    CHECK(TokenLabel::from_code(alphabet[i].code()) == alphabet[i]);
  }
}

TEST_CASE("polarity pairing is enforced") {
  CHECK_THROWS_AS(TokenLabel::tagged(Aspect::Summary, Polarity::Positive),
                  std::invalid_argument);
  CHECK_THROWS_AS(TokenLabel::tagged(Aspect::Clarity, Polarity::None),
                  std::invalid_argument);
  CHECK_THROWS_AS(TokenLabel::from_code("+summary"), std::invalid_argument);
  CHECK_THROWS_AS(TokenLabel::from_code("clarity"), std::invalid_argument);
  CHECK_THROWS_AS(TokenLabel::from_code("bogus"), std::invalid_argument);
  CHECK(TokenLabel::from_code("+meaningful_comparison") ==
        TokenLabel::tagged(Aspect::Comparison, Polarity::Positive));
}

TEST_CASE("labels_to_spans examples") {
  const auto O = TokenLabel::outside();
  const auto SUM = TokenLabel::tagged(Aspect::Summary, Polarity::None);
  const auto pCLA = TokenLabel::tagged(Aspect::Clarity, Polarity::Positive);
  const auto nSUB = TokenLabel::tagged(Aspect::Substance, Polarity::Negative);

  std::vector<TokenLabel> labels = {O, SUM, SUM, O};
  auto spans = labels_to_spans(labels);
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == AspectSpan{Aspect::Summary, Polarity::None, 1, 3});

  labels = {O, O, O};
  CHECK(labels_to_spans(std::span<const TokenLabel>(labels)).empty());

  labels = {pCLA, pCLA, nSUB};
  spans = labels_to_spans(labels);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0] == AspectSpan{Aspect::Clarity, Polarity::Positive, 0, 2});
  CHECK(spans[1] == AspectSpan{Aspect::Substance, Polarity::Negative, 2, 3});
}

TEST_CASE("labels_to_spans round-trips with spans_to_labels") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 500; ++round) {
    std::vector<TokenLabel> labels;
    const std::size_t n = rng() % 30;
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back(test::random_label(rng));
    const auto spans = labels_to_spans(std::span<const TokenLabel>(labels));
    CHECK(spans_to_labels(spans, labels.size()) == labels);
    // spans really are maximal runs: neighbors differ
    for (const auto& span : spans) {
      if (span.start > 0) CHECK(labels[span.start - 1] != span.label());
      if (span.end < labels.size()) CHECK(labels[span.end] != span.label());
    }
  }
}

TEST_CASE("review validation") {
  LabeledReview review;
  review.review_id = "r";
  review.paper_id = "p";
  review.tokens = {"fine"};
  CHECK_THROWS_AS(review.validate(), std::invalid_argument);
  review.labels = {TokenLabel::outside()};
  CHECK_NOTHROW(review.validate());
  review.recommendation = 2;
  CHECK_THROWS_AS(review.validate(), std::invalid_argument);
}

TEST_CASE("paper sentence indexing is global with the abstract first") {
  auto paper = ParsedPaper::from_texts(
      "p1", "Title", "First point. Second point.",
      {{"Introduction", "Intro one. Intro two. Intro three."},
       {"Method", "Method one."}});
  CHECK(paper.abstract_sentences.size() == 2);
  CHECK(paper.sentence_count() == 6);
  CHECK(paper.sentence(0) == "First point.");
  CHECK(paper.sentence(2) == "Intro one.");
  CHECK(paper.sentence(5) == "Method one.");
  CHECK(paper.section_range(0) == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(paper.section_range(1) == std::pair<std::size_t, std::size_t>{5, 6});
  CHECK_THROWS_AS(paper.sentence(6), std::out_of_range);
}

TEST_CASE("decision encoding") {
  CHECK(decision_value(Decision::Accept) == 1);
  CHECK(decision_value(Decision::Reject) == -1);
}
