#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revtk/metrics.hpp"
#include "support/oracles.hpp"

using namespace revtk;

namespace {

AspectSpan span(Aspect aspect, Polarity polarity, std::size_t start,
                std::size_t end) {
  return {aspect, polarity, start, end};
}

Judgments judgments_for(std::vector<NegativeSpanJudgment> entries,
                        std::optional<double> summary = std::nullopt) {
  Judgments j;
  j.review_id = "r";
  j.summary_score = summary;
  j.negative_aspects = std::move(entries);
  return j;
}

}  // namespace

TEST_CASE("racc is the product of decision and recommendation") {
  CHECK(racc(+1, +1) == 1.0);
  CHECK(racc(+1, 0) == 0.0);
  CHECK(racc(+1, -1) == -1.0);
  CHECK(racc(-1, +1) == -1.0);
  CHECK(racc(-1, 0) == 0.0);
  CHECK(racc(-1, -1) == 1.0);
  CHECK_THROWS_AS(racc(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(racc(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(racc(1, 2), std::invalid_argument);
}

TEST_CASE("rating_to_rec default 1-10 banding") {
  CHECK(rating_to_rec(1) == -1);
  CHECK(rating_to_rec(4) == -1);
  CHECK(rating_to_rec(5) == 0);
  CHECK(rating_to_rec(6) == 0);
  CHECK(rating_to_rec(7) == 1);
  CHECK(rating_to_rec(8) == 1);
  CHECK(rating_to_rec(10) == 1);
  CHECK_THROWS_AS(rating_to_rec(0), std::out_of_range);
  CHECK_THROWS_AS(rating_to_rec(11), std::out_of_range);

  const RatingScale five{1, 5, 3, 3};
  CHECK(rating_to_rec(2, five) == -1);
  CHECK(rating_to_rec(3, five) == 0);
  CHECK(rating_to_rec(4, five) == 1);

  RatingScale broken{5, 1, 3, 3};
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}

TEST_CASE("acov counts distinct aspects over eight") {
  CHECK(acov({}) == 0.0);
  std::vector<AspectSpan> spans = {
      span(Aspect::Summary, Polarity::None, 0, 3),
      span(Aspect::Clarity, Polarity::Positive, 3, 5),
      span(Aspect::Substance, Polarity::Negative, 5, 7),
      span(Aspect::Clarity, Polarity::Negative, 7, 8),  // same aspect again
  };
  CHECK(acov(spans) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));

  spans.clear();
  for (Aspect aspect : kAllAspects) {
    spans.push_back(span(aspect,
                         aspect == Aspect::Summary ? Polarity::None
                                                   : Polarity::Positive,
                         0, 1));
  }
  CHECK(acov(spans) == 1.0);
}

TEST_CASE("acov never decreases when spans are added") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 500; ++round) {
    std::vector<AspectSpan> spans;
    double previous = acov(spans);
    const int n = static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) {
      spans.push_back(test::random_span(rng, 20));
      const double next = acov(spans);
      CHECK(next >= previous);
      previous = next;
    }
  }
}

TEST_CASE("arec covers meta (aspect, polarity) pairs") {
  const std::vector<AspectSpan> meta = {
      span(Aspect::Originality, Polarity::Positive, 0, 2),
      span(Aspect::Substance, Polarity::Negative, 2, 4),
      span(Aspect::Summary, Polarity::None, 4, 8),  // summary never counts
  };
  std::vector<AspectSpan> review = {
      span(Aspect::Originality, Polarity::Positive, 0, 5),
  };
  CHECK(arec(review, meta) == doctest::Approx(0.5).epsilon(1e-15));

  review.push_back(span(Aspect::Substance, Polarity::Negative, 5, 6));
  review.push_back(span(Aspect::Clarity, Polarity::Positive, 6, 7));
  CHECK(arec(review, meta) == 1.0);

  // polarity must match
  review = {span(Aspect::Originality, Polarity::Negative, 0, 5)};
  CHECK(arec(review, meta) == 0.0);

  const std::vector<AspectSpan> summary_only = {
      span(Aspect::Summary, Polarity::None, 0, 4)};
  CHECK(arec({}, summary_only) == 1.0);
  CHECK(arec({}, {}) == 1.0);
}

TEST_CASE("informativeness over negative span occurrences") {
  const std::vector<AspectSpan> spans = {
      span(Aspect::Clarity, Polarity::Negative, 0, 2),
      span(Aspect::Clarity, Polarity::Positive, 2, 4),
      span(Aspect::Substance, Polarity::Negative, 4, 6),
      span(Aspect::Motivation, Polarity::Negative, 6, 9),
  };
  auto j = judgments_for({
      {Aspect::Clarity, 0, 2, true, 1.0},
      {Aspect::Substance, 4, 6, true, 0.5},
      {Aspect::Motivation, 6, 9, false, std::nullopt},
  });
  CHECK(informativeness(spans, j) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // no negative spans: 1 regardless of the judgments
  const std::vector<AspectSpan> positive_only = {
      span(Aspect::Clarity, Polarity::Positive, 0, 2)};
  CHECK(informativeness(positive_only, judgments_for({})) == 1.0);

  // every negative occurrence needs its own judgment entry
  auto missing = judgments_for({{Aspect::Clarity, 0, 2, true, 1.0}});
  CHECK_THROWS_AS(informativeness(spans, missing), std::invalid_argument);

  // span order does not matter
  std::vector<AspectSpan> shuffled = {spans[3], spans[0], spans[2], spans[1]};
  CHECK(informativeness(shuffled, j) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("acon averages validity over evidenced spans") {
  CHECK(acon(judgments_for({})) == 1.0);
  CHECK(acon(judgments_for({{Aspect::Clarity, 0, 2, false, std::nullopt}})) ==
        1.0);

  auto j = judgments_for({
      {Aspect::Clarity, 0, 2, true, 1.0},
      {Aspect::Substance, 2, 4, true, 0.5},
      {Aspect::Motivation, 4, 6, true, 0.0},
      {Aspect::Soundness, 6, 8, false, std::nullopt},  // not evidenced
  });
  CHECK(acon(j) == doctest::Approx(0.5).epsilon(1e-15));

  j = judgments_for({{Aspect::Clarity, 0, 2, true, std::nullopt}});
  CHECK_THROWS_AS(acon(j), std::invalid_argument);
}

TEST_CASE("sacc passes the judged score through") {
  CHECK(sacc(judgments_for({}, 1.0)) == 1.0);
  CHECK(sacc(judgments_for({}, 0.5)) == 0.5);
  CHECK(sacc(judgments_for({}, 0.0)) == 0.0);
  CHECK_THROWS_AS(sacc(judgments_for({})), std::invalid_argument);
}

TEST_CASE("aggregate: single review is the identity") {
  ReviewMetricValues values;
  values.racc = 1.0;
  values.acov = 0.25;
  values.rouge1 = 0.4;
  const auto report = aggregate({{"p1", values}});
  CHECK(*report.corpus.racc.mean() == 1.0);
  CHECK(*report.corpus.acov.mean() == 0.25);
  CHECK(*report.corpus.rouge1.mean() == 0.4);
  CHECK(*report.per_paper.at("p1").racc.mean() == 1.0);
}

TEST_CASE("aggregate: per-paper means for plain metrics") {
  ReviewMetricValues a, b;
  a.racc = 1.0;
  b.racc = -1.0;
  a.acov = b.acov = 0.5;
  const auto report = aggregate({{"p1", a}, {"p1", b}});
  CHECK(*report.per_paper.at("p1").racc.mean() == 0.0);
  CHECK(*report.corpus.racc.mean() == 0.0);
}

TEST_CASE("aggregate: similarity metrics average over reviews, not papers") {
  ReviewMetricValues a, b, c;
  a.rouge1 = 0.2;
  b.rouge1 = 0.4;
  c.rouge1 = 0.9;
  a.racc = 0.2;
  b.racc = 0.4;
  c.racc = 0.9;
  const auto report = aggregate({{"p1", a}, {"p1", b}, {"p2", c}});
  // rouge: (0.2 + 0.4 + 0.9) / 3
  CHECK(*report.corpus.rouge1.mean() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(report.corpus.rouge1.count == 3);
  // racc: mean of paper means (0.3 and 0.9)
  CHECK(*report.corpus.racc.mean() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(report.corpus.racc.count == 2);
}

TEST_CASE("aggregate skips absent values but keeps the paper row") {
  ReviewMetricValues bare;  // only acov present
  bare.acov = 0.125;
  const auto report = aggregate({{"p9", bare}});
  CHECK(report.per_paper.count("p9") == 1);
  CHECK(!report.corpus.racc.mean());
  CHECK(report.corpus.racc.count == 0);
  CHECK(*report.corpus.acov.mean() == 0.125);
}

TEST_CASE("metric ranges hold on randomized reviews") {
  std::mt19937_64 rng(808);
  for (int round = 0; round < 10000; ++round) {
    const std::size_t tokens = 1 + rng() % 30;
    std::vector<AspectSpan> spans;
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) spans.push_back(test::random_span(rng, tokens));

    std::vector<AspectSpan> meta;
    const int m = static_cast<int>(rng() % 4);
    for (int i = 0; i < m; ++i) meta.push_back(test::random_span(rng, tokens));

    Judgments j;
    j.review_id = "r";
    j.summary_score = 0.5 * static_cast<double>(rng() % 3);
    for (const auto& s : spans) {
      if (s.polarity != Polarity::Negative) continue;
      NegativeSpanJudgment nj;
      nj.aspect = s.aspect;
      nj.start = s.start;
      nj.end = s.end;
      nj.has_evidence = rng() % 2 == 0;
      if (nj.has_evidence) nj.validity = 0.5 * static_cast<double>(rng() % 3);
      j.negative_aspects.push_back(nj);
    }

    ReviewMetricValues values;
    values.racc = racc(rng() % 2 == 0 ? 1 : -1,
                       static_cast<int>(rng() % 3) - 1);
    values.acov = acov(spans);
    values.arec = arec(spans, meta);
    values.info = informativeness(spans, j);
    values.acon = acon(j);
    values.sacc = sacc(j);
    CHECK_NOTHROW(values.validate());
  }
}
