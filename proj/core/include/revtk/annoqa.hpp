#ifndef REVTK_ANNOQA_HPP
#define REVTK_ANNOQA_HPP

#include <array>
#include <vector>

#include "revtk/aspect.hpp"

namespace revtk {

/// Annotation-quality judgments for one review: the model's predicted spans
/// M, the subset each of three annotators kept, and the spans each annotator
/// added that the model missed.
struct SpanJudgmentSet {
  std::vector<AspectSpan> predictions;            // M
  std::array<std::vector<AspectSpan>, 3> kept;    // F1, F2, F3 (subsets of M)
  std::array<std::vector<AspectSpan>, 3> added;   // A, B, C

  /// Throws std::invalid_argument when some kept span is not a prediction
  /// (identity on aspect, polarity, start, end).
  void validate() const;
};

/// The raw quantities behind both measures: n_M (distinct predictions),
/// n_C (predictions kept by all three annotators) and the
/// inclusion-exclusion total n.
struct SpanJudgmentCounts {
  std::size_t predictions = 0;
  std::size_t common_kept = 0;
  long total = 0;
};

SpanJudgmentCounts annoqa_counts(const SpanJudgmentSet& sjs);

/// |F1 n F2 n F3| / |M|; 1 when there are no predictions.
double aspect_precision(const SpanJudgmentSet& sjs);

/// n_M / n with n = n_M + n_A + n_B + n_C - n_I1 - n_I2 - n_I3 + n_I.
/// Two added spans from different annotators count as the same missed span
/// when they share aspect and polarity and their token overlap exceeds half
/// the shorter span (0.3 of the shortest for the three-way set). Each span
/// joins at most one pair/triple, matched greedily by largest overlap with
/// ties to the earlier span. Returns 1 when n is 0.
double aspect_recall(const SpanJudgmentSet& sjs);

}  // namespace revtk

#endif  // REVTK_ANNOQA_HPP
