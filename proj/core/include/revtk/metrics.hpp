#ifndef REVTK_METRICS_HPP
#define REVTK_METRICS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revtk/aspect.hpp"
#include "revtk/review.hpp"

namespace revtk {

/// Recommendation accuracy: decision (+1/-1) times recommendation
/// (-1/0/+1). Throws std::invalid_argument on values outside those sets.
double racc(int decision, int recommendation);

/// Three-way banding of a venue rating: below the neutral band -> reject,
/// inside it -> neutral, above it -> accept. The default matches a 1-10
/// scale with 5-6 as the marginal band.
struct RatingScale {
  int min = 1;
  int max = 10;
  int neutral_min = 5;
  int neutral_max = 6;

  void validate() const;  // throws std::invalid_argument
};

/// Maps a rating to {-1, 0, +1}. Throws std::out_of_range when the rating is
/// off the scale.
int rating_to_rec(int rating, const RatingScale& scale = {});

/// Aspect coverage: distinct aspects present (polarity ignored) over the
/// 8-aspect typology.
double acov(std::span<const AspectSpan> spans);

/// Aspect recall: of the distinct non-summary (aspect, polarity) pairs in
/// the meta-review, the fraction also present in the review. An aspect-free
/// meta-review yields 1.
double arec(std::span<const AspectSpan> review_spans,
            std::span<const AspectSpan> meta_spans);

/// Informativeness: fraction of negative-polarity span occurrences that are
/// backed by evidence; 1 when there are none. Every negative span occurrence
/// must have a judgment entry matching its (aspect, start, end); a missing
/// entry throws std::invalid_argument.
double informativeness(std::span<const AspectSpan> spans,
                       const Judgments& judgments);

/// Aspect-level constructiveness: mean validity score over evidenced
/// negative spans; 1 when nothing is evidenced. A missing validity score
/// throws std::invalid_argument.
double acon(const Judgments& judgments);

/// Summary accuracy: the judged 0/0.5/1 score, verbatim. Throws
/// std::invalid_argument when no summary judgment is present.
double sacc(const Judgments& judgments);

/// Per-review metric values. Only acov is always defined; anything that
/// needs a decision, a meta-review, judgments or references stays empty when
/// that input is missing.
struct ReviewMetricValues {
  std::optional<double> racc;
  double acov = 0.0;
  std::optional<double> arec;
  std::optional<double> info;
  std::optional<double> acon;
  std::optional<double> sacc;
  std::optional<double> rouge1;
  std::optional<double> rouge2;
  std::optional<double> rougeL;
  std::optional<double> similarity;  // externally computed, max-aggregated

  /// Throws std::invalid_argument when a present value is outside its range.
  void validate() const;
};

/// Running mean with a contribution count.
struct MetricStat {
  double sum = 0.0;
  int count = 0;

  void add(double v) { sum += v; ++count; }
  std::optional<double> mean() const {
    if (count == 0) return std::nullopt;
    return sum / count;
  }
};

/// One named value per metric. Field order matches ReviewMetricValues.
struct MetricTable {
  MetricStat racc, acov, arec, info, acon, sacc, rouge1, rouge2, rougeL,
      similarity;

  /// Calls fn(name, stat) for every metric, in a fixed order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    fn("racc", racc); fn("acov", acov); fn("arec", arec); fn("info", info);
    fn("acon", acon); fn("sacc", sacc); fn("rouge1", rouge1);
    fn("rouge2", rouge2); fn("rougeL", rougeL); fn("similarity", similarity);
  }
};

/// Corpus aggregation. Non-similarity metrics average per paper and then
/// over papers; similarity metrics (ROUGE, external similarity) are already
/// max-aggregated per review and average directly over reviews.
struct MetricReport {
  std::map<std::string, MetricTable> per_paper;
  MetricTable corpus;
};

MetricReport aggregate(
    const std::vector<std::pair<std::string, ReviewMetricValues>>& per_review);

}  // namespace revtk

#endif  // REVTK_METRICS_HPP
