#ifndef REVTK_REVIEW_HPP
#define REVTK_REVIEW_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revtk/aspect.hpp"

namespace revtk {

/// A tokenized review with one label per token. Tokens are taken as given in
/// the input; the toolkit never re-tokenizes a labeled review.
struct LabeledReview {
  std::string review_id;
  std::string paper_id;
  std::vector<std::string> tokens;
  std::vector<TokenLabel> labels;
  std::optional<int> rating;          // on the venue's scale
  std::optional<int> recommendation;  // -1 reject, 0 neutral, +1 accept
  bool is_meta = false;

  /// Throws std::invalid_argument when |labels| != |tokens| or the
  /// recommendation is outside {-1, 0, +1}.
  void validate() const;
};

/// Maximal runs of identical non-Outside labels, in token order.
std::vector<AspectSpan> labels_to_spans(std::span<const TokenLabel> labels);
std::vector<AspectSpan> labels_to_spans(const LabeledReview& review);

/// Inverse of labels_to_spans: expands spans back to a label sequence of
/// length `token_count`, with Outside in the gaps.
std::vector<TokenLabel> spans_to_labels(std::span<const AspectSpan> spans,
                                        std::size_t token_count);

/// One judged negative-aspect span occurrence. `validity` is present only
/// when `has_evidence` is true.
struct NegativeSpanJudgment {
  Aspect aspect = Aspect::Motivation;
  std::size_t start = 0;
  std::size_t end = 0;
  bool has_evidence = false;
  std::optional<double> validity;  // 0, 0.5 or 1
};

/// Human judgments for one review: the summary-accuracy score and one entry
/// per negative-polarity span occurrence.
struct Judgments {
  std::string review_id;
  std::optional<double> summary_score;  // 0, 0.5 or 1
  std::vector<NegativeSpanJudgment> negative_aspects;
};

}  // namespace revtk

#endif  // REVTK_REVIEW_HPP
