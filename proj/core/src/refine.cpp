#include "revtk/refine.hpp"

#include <cctype>

namespace revtk {

bool is_special_symbol(std::string_view token) {
  return token.size() == 1 &&
         std::isalnum(static_cast<unsigned char>(token[0])) == 0;
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (std::ispunct(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

bool ends_with_period(std::string_view token) {
  return !token.empty() && token.back() == '.';
}

namespace {

using Labels = std::vector<TokenLabel>;

const TokenLabel kOutside = TokenLabel::outside();
const TokenLabel kSummary = TokenLabel::tagged(Aspect::Summary, Polarity::None);

void apply(Labels& labels, RefineTrace& trace, int rule, std::size_t begin,
           std::size_t end, TokenLabel to) {
  trace.edits.push_back({rule, begin, end, labels[begin], to});
  for (std::size_t i = begin; i < end; ++i) labels[i] = to;
}

bool all_outside(const Labels& labels, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (!labels[i].is_outside()) return false;
  }
  return true;
}

// Rule 1: an all-Outside gap between two summary spans becomes summary.
bool rule1(const std::vector<std::string>&, Labels& labels,
           RefineTrace& trace) {
  bool changed = false;
  const auto spans = labels_to_spans(labels);
  const AspectSpan* previous_summary = nullptr;
  for (const auto& span : spans) {
    if (span.aspect != Aspect::Summary) continue;
    if (previous_summary != nullptr) {
      const std::size_t gap_begin = previous_summary->end;
      const std::size_t gap_end = span.start;
      if (gap_begin < gap_end && all_outside(labels, gap_begin, gap_end)) {
        apply(labels, trace, 1, gap_begin, gap_end, kSummary);
        changed = true;
      }
    }
    previous_summary = &span;
  }
  return changed;
}

// Rule 2: of multiple discontinuous summary spans, only the first survives.
bool rule2(const std::vector<std::string>&, Labels& labels,
           RefineTrace& trace) {
  bool changed = false;
  bool seen = false;
  for (const auto& span : labels_to_spans(labels)) {
    if (span.aspect != Aspect::Summary) continue;
    if (seen) {
      apply(labels, trace, 2, span.start, span.end, kOutside);
      changed = true;
    }
    seen = true;
  }
  return changed;
}

// Rule 3: a punctuation token labeled differently from both neighbors
// becomes Outside. A missing neighbor counts as different.
bool rule3(const std::vector<std::string>& tokens, Labels& labels,
           RefineTrace& trace) {
  bool changed = false;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].is_outside() || !is_punctuation_token(tokens[i])) continue;
    const bool differs_left = i == 0 || labels[i - 1] != labels[i];
    const bool differs_right = i + 1 == n || labels[i + 1] != labels[i];
    if (differs_left && differs_right) {
      apply(labels, trace, 3, i, i + 1, kOutside);
      changed = true;
    }
  }
  return changed;
}

// Rule 4: a single token separating two spans of one identical non-Outside
// label adopts that label (its right neighbor's tag).
bool rule4(const std::vector<std::string>&, Labels& labels,
           RefineTrace& trace) {
  bool changed = false;
  const std::size_t n = labels.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (labels[i - 1].is_outside()) continue;
    if (labels[i - 1] != labels[i + 1] || labels[i] == labels[i - 1]) continue;
    apply(labels, trace, 4, i, i + 1, labels[i + 1]);
    changed = true;
  }
  return changed;
}

// Rule 5: a single labeled token flanked by Outside (sequence boundaries
// count as Outside) becomes Outside.
bool rule5(const std::vector<std::string>&, Labels& labels,
           RefineTrace& trace) {
  bool changed = false;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].is_outside()) continue;
    const bool left_outside = i == 0 || labels[i - 1].is_outside();
    const bool right_outside = i + 1 == n || labels[i + 1].is_outside();
    if (left_outside && right_outside) {
      apply(labels, trace, 5, i, i + 1, kOutside);
      changed = true;
    }
  }
  return changed;
}

// Rule 6: a non-summary span flanked by Outside expands over Outside tokens,
// per side, until a labeled token or a special symbol is met. A side whose
// boundary token is itself a special symbol does not expand.
bool rule6(const std::vector<std::string>& tokens, Labels& labels,
           RefineTrace& trace) {
  bool changed = false;
  const std::size_t n = labels.size();
  for (const auto& span : labels_to_spans(labels)) {
    if (span.aspect == Aspect::Summary) continue;
    // Flank check runs against the current labels: an earlier expansion may
    // have filled the gap to this span's left.
    const bool left_outside =
        span.start == 0 || labels[span.start - 1].is_outside();
    const bool right_outside = span.end == n || labels[span.end].is_outside();
    if (!left_outside || !right_outside) continue;
    const TokenLabel label = span.label();
    if (!is_special_symbol(tokens[span.start])) {
      std::size_t j = span.start;
      while (j > 0 && labels[j - 1].is_outside() &&
             !is_special_symbol(tokens[j - 1]))
        --j;
      if (j < span.start) {
        apply(labels, trace, 6, j, span.start, label);
        changed = true;
      }
    }
    if (!is_special_symbol(tokens[span.end - 1])) {
      std::size_t k = span.end;
      while (k < n && labels[k].is_outside() && !is_special_symbol(tokens[k]))
        ++k;
      if (k > span.end) {
        apply(labels, trace, 6, span.end, k, label);
        changed = true;
      }
    }
  }
  return changed;
}

// Rule 7: a summary span that does not end with a period is extended right
// over Outside tokens, or failing that truncated, by at most five tokens so
// that it ends with one.
bool rule7(const std::vector<std::string>& tokens, Labels& labels,
           RefineTrace& trace) {
  bool changed = false;
  const std::size_t n = labels.size();
  for (const auto& span : labels_to_spans(labels)) {
    if (span.aspect != Aspect::Summary) continue;
    if (ends_with_period(tokens[span.end - 1])) continue;

    bool extended = false;
    for (std::size_t k = span.end; k < n && k < span.end + 5; ++k) {
      if (!labels[k].is_outside()) break;  // never extend over another span
      if (ends_with_period(tokens[k])) {
        apply(labels, trace, 7, span.end, k + 1, kSummary);
        extended = true;
        changed = true;
        break;
      }
    }
    if (extended) continue;

    // Truncate: drop at most five trailing tokens down to the nearest period.
    const std::size_t lowest =
        span.length() > 6 ? span.end - 6 : span.start;
    for (std::size_t j = span.end - 1; j-- > lowest;) {
      if (ends_with_period(tokens[j])) {
        apply(labels, trace, 7, j + 1, span.end, kOutside);
        changed = true;
        break;
      }
    }
  }
  return changed;
}

}  // namespace

std::pair<LabeledReview, RefineTrace> refine(const LabeledReview& review) {
  review.validate();
  LabeledReview refined = review;
  RefineTrace trace;

  // One pass = the seven rules in order, each a single left-to-right sweep
  // over the labels the previous rules produced. The pass repeats until the
  // labels are a fixed point, so refining twice changes nothing.
  constexpr int kMaxPasses = 64;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;
    changed |= rule1(refined.tokens, refined.labels, trace);
    changed |= rule2(refined.tokens, refined.labels, trace);
    changed |= rule3(refined.tokens, refined.labels, trace);
    changed |= rule4(refined.tokens, refined.labels, trace);
    changed |= rule5(refined.tokens, refined.labels, trace);
    changed |= rule6(refined.tokens, refined.labels, trace);
    changed |= rule7(refined.tokens, refined.labels, trace);
    if (!changed) break;
  }
  return {std::move(refined), std::move(trace)};
}

std::vector<TokenLabel> replay_trace(std::span<const TokenLabel> input,
                                     const RefineTrace& trace) {
  std::vector<TokenLabel> labels(input.begin(), input.end());
  for (const auto& edit : trace.edits) {
    for (std::size_t i = edit.begin; i < edit.end && i < labels.size(); ++i)
      labels[i] = edit.to;
  }
  return labels;
}

}  // namespace revtk
