#ifndef REVTK_ROUGE_HPP
#define REVTK_ROUGE_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revtk/text.hpp"

namespace revtk {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

enum class RougeMetric { Rouge1, Rouge2, RougeL };

/// Clipped multiset n-gram match. Recall is matches over reference n-grams,
/// precision is matches over candidate n-grams. A side with zero n-grams
/// scores 0 everywhere.
RougeScore rouge_n(std::span<const std::string> candidate,
                   std::span<const std::string> reference, int n);

/// Longest-common-subsequence variant: recall = LCS/|reference|,
/// precision = LCS/|candidate|.
RougeScore rouge_l(std::span<const std::string> candidate,
                   std::span<const std::string> reference);

RougeScore rouge_score(std::span<const std::string> candidate,
                       std::span<const std::string> reference,
                       RougeMetric metric);

/// Scores the candidate against every reference and returns the score with
/// the highest F1 (first such reference on ties). Throws
/// std::invalid_argument when `references` is empty.
RougeScore max_aggregate(std::span<const std::string> candidate,
                         const std::vector<std::vector<std::string>>& references,
                         RougeMetric metric);

/// Normalizes text for ROUGE scoring: lowercase, punctuation removed,
/// whitespace tokens. Stopword removal is off unless a set is supplied.
std::vector<std::string> rouge_tokens(std::string_view text,
                                      const StopwordSet* stopwords = nullptr);

}  // namespace revtk

#endif  // REVTK_ROUGE_HPP
