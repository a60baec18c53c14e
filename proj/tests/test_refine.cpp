#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revtk/refine.hpp"
#include "support/oracles.hpp"
#include "support/refine_fixtures.hpp"

using namespace revtk;

namespace {

LabeledReview make_review(std::vector<std::string> tokens,
                          std::vector<std::string> codes) {
  LabeledReview review;
  review.review_id = "r";
  review.paper_id = "p";
  review.tokens = std::move(tokens);
  for (const auto& code : codes)
    review.labels.push_back(TokenLabel::from_code(code));
  return review;
}

std::vector<std::string> codes_of(const LabeledReview& review) {
  std::vector<std::string> codes;
  for (const auto& label : review.labels) codes.push_back(label.code());
  return codes;
}

}  // namespace

TEST_CASE("token predicates") {
  CHECK(is_special_symbol("."));
  CHECK(is_special_symbol(","));
  CHECK(!is_special_symbol("a"));
  CHECK(!is_special_symbol("2"));
  CHECK(!is_special_symbol(".."));

  CHECK(is_punctuation_token("."));
  CHECK(is_punctuation_token("..."));
  CHECK(!is_punctuation_token("p,"));
  CHECK(!is_punctuation_token(""));

  CHECK(ends_with_period("tasks."));
  CHECK(ends_with_period("."));
  CHECK(!ends_with_period("tasks"));
}

TEST_CASE("all seven rule example rows are reproduced") {
  for (const auto& fixture : test::refine_fixtures()) {
    CAPTURE(fixture.rule);
    const auto [refined, trace] = refine(test::fixture_review(fixture));
    CHECK(codes_of(refined) == fixture.after);
    // the demonstrated rule must appear in the trace (rows that change)
    if (fixture.before != fixture.after) {
      bool saw_rule = false;
      for (const auto& edit : trace.edits) saw_rule |= edit.rule == fixture.rule;
      CHECK(saw_rule);
    }
  }
}

TEST_CASE("an empty review is a fixed point") {
  LabeledReview empty;
  empty.review_id = "r";
  empty.paper_id = "p";
  const auto [refined, trace] = refine(empty);
  CHECK(refined.labels.empty());
  CHECK(trace.edits.empty());
}

TEST_CASE("all-Outside input is a fixed point with an empty trace") {
  auto review = make_review({"nothing", "to", "see", "."},
                            {"O", "O", "O", "O"});
  const auto [refined, trace] = refine(review);
  CHECK(refined.labels == review.labels);
  CHECK(trace.edits.empty());
}

TEST_CASE("rule 4 fills a one-token gap only between identical labels") {
  // gap tokens here are special symbols so rule 6 cannot expand over them
  auto review = make_review({"really", "good", ";", "nice", "work"},
                            {"+clarity", "+clarity", "O", "+clarity",
                             "+clarity"});
  auto refined = refine(review).first;
  CHECK(refined.labels[2] ==
        TokenLabel::tagged(Aspect::Clarity, Polarity::Positive));

  // different flanking labels stay apart
  review = make_review({"really", "good", ";", "weak", "results"},
                       {"+clarity", "+clarity", "O", "-substance",
                        "-substance"});
  refined = refine(review).first;
  CHECK(refined.labels[2].is_outside());

  // two-token gaps are out of rule 4's scope
  review = make_review({"really", "good", ";", ";", "nice", "work"},
                       {"+clarity", "+clarity", "O", "O", "+clarity",
                        "+clarity"});
  refined = refine(review).first;
  CHECK(refined.labels[2].is_outside());
  CHECK(refined.labels[3].is_outside());
}

TEST_CASE("rule 6 skips summary spans and special-symbol boundaries") {
  // summary spans never expand
  auto review = make_review({"a", "b", "summaryish", "c", "d"},
                            {"O", "O", "summary", "O", "O"});
  auto refined = refine(review).first;
  // (the lone summary token is removed by rule 5 first)
  CHECK(labels_to_spans(refined).empty());

  // span starting with a special symbol does not expand left
  review = make_review({"before", ",", "rest", "of", "span", "after", "."},
                       {"O", "-clarity", "-clarity", "-clarity", "-clarity",
                        "O", "O"});
  refined = refine(review).first;
  CHECK(refined.labels[0].is_outside());
  // but it expands right, up to the final period
  CHECK(refined.labels[5] ==
        TokenLabel::tagged(Aspect::Clarity, Polarity::Negative));
  CHECK(refined.labels[6].is_outside());
}

TEST_CASE("rule 7 truncates to an interior period when it cannot extend") {
  // extension is blocked by the adjacent labeled token; the span must be
  // truncated back to "done."
  auto review = make_review(
      {"The", "idea", "is", "done.", "loose", "words", "bad", "stuff"},
      {"summary", "summary", "summary", "summary", "summary", "summary",
       "-substance", "-substance"});
  const auto refined = refine(review).first;
  const auto spans = labels_to_spans(refined);
  REQUIRE(!spans.empty());
  CHECK(spans[0].aspect == Aspect::Summary);
  CHECK(spans[0].end == 4);  // ends right after "done."
}

TEST_CASE("rule 7 leaves the span alone when no period is reachable") {
  auto review = make_review({"words", "with", "no", "period", "at", "all"},
                            {"summary", "summary", "summary", "summary",
                             "summary", "summary"});
  const auto [refined, trace] = refine(review);
  CHECK(codes_of(refined) == codes_of(review));
  CHECK(trace.edits.empty());
}

TEST_CASE("after refine at most one summary span remains") {
  std::mt19937_64 rng(5150);
  for (int round = 0; round < 2000; ++round) {
    auto [tokens, labels] = test::random_labeled_sequence(rng);
    LabeledReview review;
    review.review_id = "r";
    review.paper_id = "p";
    review.tokens = std::move(tokens);
    review.labels = std::move(labels);
    const auto refined = refine(review).first;
    int summary_spans = 0;
    for (const auto& span : labels_to_spans(refined))
      summary_spans += span.aspect == Aspect::Summary;
    CHECK(summary_spans <= 1);
  }
}

TEST_CASE("refine is idempotent and traces replay exactly") {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 2000; ++round) {
    auto [tokens, labels] = test::random_labeled_sequence(rng);
    LabeledReview review;
    review.review_id = "r";
    review.paper_id = "p";
    review.tokens = tokens;
    review.labels = labels;

    const auto [once, trace] = refine(review);
    CHECK(once.tokens == review.tokens);  // labels only, never text
    CHECK(replay_trace(review.labels, trace) == once.labels);

    const auto [twice, trace2] = refine(once);
    CHECK(twice.labels == once.labels);
    CHECK(trace2.edits.empty());
  }
}
