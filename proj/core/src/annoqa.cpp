#include "revtk/annoqa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace revtk {

namespace {

using SpanKey = std::tuple<Aspect, Polarity, std::size_t, std::size_t>;

SpanKey key(const AspectSpan& span) {
  return {span.aspect, span.polarity, span.start, span.end};
}

// Token overlap of two spans; 0 unless aspect and polarity match.
std::size_t overlap(const AspectSpan& a, const AspectSpan& b) {
  if (a.aspect != b.aspect || a.polarity != b.polarity) return 0;
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  return hi > lo ? hi - lo : 0;
}

std::size_t overlap3(const AspectSpan& a, const AspectSpan& b,
                     const AspectSpan& c) {
  if (a.aspect != b.aspect || a.polarity != b.polarity ||
      a.aspect != c.aspect || a.polarity != c.polarity)
    return 0;
  const std::size_t lo = std::max({a.start, b.start, c.start});
  const std::size_t hi = std::min({a.end, b.end, c.end});
  return hi > lo ? hi - lo : 0;
}

// Greedy pair matching: repeatedly take the qualifying (a, b) pair with the
// largest overlap (earlier spans win ties) until none is left; each span
// joins at most one pair.
std::size_t common_pair_count(const std::vector<AspectSpan>& lhs,
                              const std::vector<AspectSpan>& rhs,
                              double threshold) {
  struct Candidate {
    std::size_t shared;
    std::size_t i, j;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      const std::size_t shared = overlap(lhs[i], rhs[j]);
      if (shared == 0) continue;
      const double shortest = static_cast<double>(
          std::min(lhs[i].length(), rhs[j].length()));
      if (static_cast<double>(shared) / shortest > threshold)
        candidates.push_back({shared, i, j});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.shared != b.shared) return a.shared > b.shared;
              if (a.i != b.i) return a.i < b.i;
              return a.j < b.j;
            });
  std::vector<char> used_i(lhs.size(), 0), used_j(rhs.size(), 0);
  std::size_t matched = 0;
  for (const auto& c : candidates) {
    if (used_i[c.i] || used_j[c.j]) continue;
    used_i[c.i] = used_j[c.j] = 1;
    ++matched;
  }
  return matched;
}

// Same policy over triples, with the three-way intersection ratio.
std::size_t common_triple_count(const std::vector<AspectSpan>& a,
                                const std::vector<AspectSpan>& b,
                                const std::vector<AspectSpan>& c,
                                double threshold) {
  struct Candidate {
    std::size_t shared;
    std::size_t i, j, k;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        const std::size_t shared = overlap3(a[i], b[j], c[k]);
        if (shared == 0) continue;
        const double shortest = static_cast<double>(
            std::min({a[i].length(), b[j].length(), c[k].length()}));
        if (static_cast<double>(shared) / shortest > threshold)
          candidates.push_back({shared, i, j, k});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.shared != y.shared) return x.shared > y.shared;
              return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
            });
  std::vector<char> used_i(a.size(), 0), used_j(b.size(), 0),
      used_k(c.size(), 0);
  std::size_t matched = 0;
  for (const auto& cand : candidates) {
    if (used_i[cand.i] || used_j[cand.j] || used_k[cand.k]) continue;
    used_i[cand.i] = used_j[cand.j] = used_k[cand.k] = 1;
    ++matched;
  }
  return matched;
}

}  // namespace

void SpanJudgmentSet::validate() const {
  std::set<SpanKey> prediction_keys;
  for (const auto& span : predictions) prediction_keys.insert(key(span));
  for (std::size_t annotator = 0; annotator < kept.size(); ++annotator) {
    for (const auto& span : kept[annotator]) {
      if (prediction_keys.count(key(span)) == 0) {
        throw std::invalid_argument(
            "annotator " + std::to_string(annotator + 1) +
            " kept a span that is not among the predictions");
      }
    }
  }
}

SpanJudgmentCounts annoqa_counts(const SpanJudgmentSet& sjs) {
  sjs.validate();
  SpanJudgmentCounts counts;

  std::set<SpanKey> predictions;
  for (const auto& span : sjs.predictions) predictions.insert(key(span));
  counts.predictions = predictions.size();
  for (const auto& k : predictions) {
    bool kept_by_all = true;
    for (const auto& kept : sjs.kept) {
      bool found = false;
      for (const auto& span : kept) {
        if (key(span) == k) {
          found = true;
          break;
        }
      }
      if (!found) {
        kept_by_all = false;
        break;
      }
    }
    if (kept_by_all) ++counts.common_kept;
  }

  const auto& a = sjs.added[0];
  const auto& b = sjs.added[1];
  const auto& c = sjs.added[2];
  const std::size_t n_i1 = common_pair_count(a, b, 0.5);
  const std::size_t n_i2 = common_pair_count(b, c, 0.5);
  const std::size_t n_i3 = common_pair_count(a, c, 0.5);
  const std::size_t n_i = common_triple_count(a, b, c, 0.3);
  counts.total = static_cast<long>(counts.predictions) +
                 static_cast<long>(a.size()) + static_cast<long>(b.size()) +
                 static_cast<long>(c.size()) - static_cast<long>(n_i1) -
                 static_cast<long>(n_i2) - static_cast<long>(n_i3) +
                 static_cast<long>(n_i);
  return counts;
}

double aspect_precision(const SpanJudgmentSet& sjs) {
  const auto counts = annoqa_counts(sjs);
  if (counts.predictions == 0) return 1.0;  // nothing asserted, nothing wrong
  return static_cast<double>(counts.common_kept) /
         static_cast<double>(counts.predictions);
}

double aspect_recall(const SpanJudgmentSet& sjs) {
  const auto counts = annoqa_counts(sjs);
  if (counts.total <= 0) return 1.0;  // nothing predicted and nothing added
  return static_cast<double>(counts.predictions) /
         static_cast<double>(counts.total);
}

}  // namespace revtk
