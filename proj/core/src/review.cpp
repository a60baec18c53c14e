#include "revtk/review.hpp"

#include <stdexcept>

namespace revtk {

void LabeledReview::validate() const {
  if (labels.size() != tokens.size()) {
    throw std::invalid_argument("review " + review_id + ": " +
                                std::to_string(labels.size()) + " labels for " +
                                std::to_string(tokens.size()) + " tokens");
  }
  if (recommendation && (*recommendation < -1 || *recommendation > 1)) {
    throw std::invalid_argument("review " + review_id +
                                ": recommendation must be -1, 0 or +1");
  }
}

std::vector<AspectSpan> labels_to_spans(std::span<const TokenLabel> labels) {
  std::vector<AspectSpan> spans;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (labels[i].is_outside()) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    spans.push_back({labels[i].aspect(), labels[i].polarity(), i, j});
    i = j;
  }
  return spans;
}

std::vector<AspectSpan> labels_to_spans(const LabeledReview& review) {
  review.validate();
  return labels_to_spans(std::span<const TokenLabel>(review.labels));
}

std::vector<TokenLabel> spans_to_labels(std::span<const AspectSpan> spans,
                                        std::size_t token_count) {
  std::vector<TokenLabel> labels(token_count, TokenLabel::outside());
  for (const auto& span : spans) {
    if (span.start >= span.end || span.end > token_count)
      throw std::invalid_argument("span range outside the token sequence");
    for (std::size_t i = span.start; i < span.end; ++i)
      labels[i] = span.label();
  }
  return labels;
}

}  // namespace revtk
