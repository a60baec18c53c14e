#ifndef REVTK_BIAS_HPP
#define REVTK_BIAS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "revtk/aspect.hpp"

namespace revtk {

/// Fraction of positive occurrences of `aspect` in one review's spans, or
/// 0.5 (neutral) when the aspect never occurs. Summary is not a valid
/// argument; it carries no polarity.
double aspect_score(std::span<const AspectSpan> review_spans, Aspect aspect);

/// A review, reduced to its spans, for group-level scoring.
using SpanSet = std::vector<AspectSpan>;

/// Mean per-review aspect_score over a group. Throws std::invalid_argument
/// on an empty group.
double group_aspect_score(std::span<const SpanSet> reviews, Aspect aspect);

/// Per-paper variant: reviews average within their paper first, then papers
/// average. One inner vector per paper. Throws std::invalid_argument when
/// the group is empty or any paper has no reviews.
double group_aspect_score_by_paper(
    std::span<const std::vector<SpanSet>> papers, Aspect aspect);

/// delta = AS(G0) - AS(G1).
double disparity(std::span<const SpanSet> group0, std::span<const SpanSet> group1,
                 Aspect aspect);

/// Delta = delta(generated) - delta(reference). Positive means the generated
/// reviews favor G0 more than the reference reviews do.
double disparity_difference(double generated_disparity,
                            double reference_disparity);

/// Scores and disparities for one polar aspect.
struct AspectBias {
  Aspect aspect = Aspect::Motivation;
  double ref_g0 = 0.0;
  double ref_g1 = 0.0;
  double gen_g0 = 0.0;
  double gen_g1 = 0.0;
  double ref_disparity = 0.0;   // ref_g0 - ref_g1
  double gen_disparity = 0.0;   // gen_g0 - gen_g1
  double disparity_difference = 0.0;  // gen_disparity - ref_disparity
};

/// Group audit over the seven polar aspects. `total` is the sum of absolute
/// disparity differences.
struct BiasReport {
  std::string criterion;
  std::size_t ref_g0_reviews = 0, ref_g1_reviews = 0;
  std::size_t gen_g0_reviews = 0, gen_g1_reviews = 0;
  std::array<AspectBias, kAspectCount - 1> aspects;
  double total = 0.0;
};

BiasReport bias_report(std::string criterion,
                       std::span<const SpanSet> ref_g0,
                       std::span<const SpanSet> ref_g1,
                       std::span<const SpanSet> gen_g0,
                       std::span<const SpanSet> gen_g1);

/// Chart rows: set,group,aspect,score with one row per (review set, group,
/// polar aspect).
std::string spider_csv(const BiasReport& report);

/// Minimal standalone radar chart, one polygon per (review set, group).
std::string spider_svg(const BiasReport& report);

}  // namespace revtk

#endif  // REVTK_BIAS_HPP
