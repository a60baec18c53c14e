#ifndef REVTK_REFINE_HPP
#define REVTK_REFINE_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "revtk/review.hpp"

namespace revtk {

/// One label rewrite performed by a refinement rule: tokens in [begin, end)
/// switched from `from` to `to`. The `from` label is uniform over the range.
struct RefineEdit {
  int rule = 0;  // 1..7
  std::size_t begin = 0;
  std::size_t end = 0;
  TokenLabel from;
  TokenLabel to;

  friend bool operator==(const RefineEdit&, const RefineEdit&) = default;
};

struct RefineTrace {
  std::vector<RefineEdit> edits;
};

/// Repairs a raw token-label sequence with the seven sequential heuristic
/// rules:
///   1. fill an all-Outside gap between two summary spans with summary;
///   2. keep only the first of multiple discontinuous summary spans;
///   3. a punctuation token labeled differently from both neighbors -> O;
///   4. a single token separating two identically labeled spans adopts that
///      label;
///   5. a single labeled token flanked by Outside -> O;
///   6. a non-summary span flanked by Outside expands over Outside tokens
///      until a labeled token or a special symbol (single non-alphanumeric
///      character) is met, on each side whose boundary token is not itself a
///      special symbol;
///   7. a summary span not ending in a period is extended right, or failing
///      that truncated, by at most five tokens so that it does.
///
/// Rules run in order, each as one left-to-right pass over the current
/// labels; the pass sequence repeats until the labels stop changing, so the
/// result is a fixed point: refine(refine(x)) == refine(x). Token text is
/// never modified. The returned trace replays to the output.
std::pair<LabeledReview, RefineTrace> refine(const LabeledReview& review);

/// Applies a trace to a label sequence. Used to audit refine() output.
std::vector<TokenLabel> replay_trace(std::span<const TokenLabel> input,
                                     const RefineTrace& trace);

/// Single character that is not alphanumeric (rule 6's expansion barrier).
bool is_special_symbol(std::string_view token);

/// Nonempty token made entirely of punctuation characters (rule 3's target).
bool is_punctuation_token(std::string_view token);

/// True when the token's last character is '.', i.e. it can close a summary
/// sentence (rule 7).
bool ends_with_period(std::string_view token);

}  // namespace revtk

#endif  // REVTK_REFINE_HPP
