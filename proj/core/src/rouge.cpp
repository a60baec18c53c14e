#include "revtk/rouge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace revtk {

namespace {

RougeScore from_counts(long matches, long candidate_total, long reference_total) {
  RougeScore score;
  if (candidate_total == 0 || reference_total == 0) return score;
  score.precision = static_cast<double>(matches) / candidate_total;
  score.recall = static_cast<double>(matches) / reference_total;
  if (score.precision + score.recall > 0) {
    score.f1 = 2.0 * score.precision * score.recall /
               (score.precision + score.recall);
  }
  return score;
}

// n-gram multiset, keyed by the space-joined gram.
std::map<std::string, long> ngram_counts(std::span<const std::string> tokens,
                                         int n) {
  std::map<std::string, long> counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (int k = 1; k < n; ++k) {
      gram.push_back(' ');
      gram += tokens[i + k];
    }
    ++counts[gram];
  }
  return counts;
}

}  // namespace

RougeScore rouge_n(std::span<const std::string> candidate,
                   std::span<const std::string> reference, int n) {
  if (n < 1) throw std::invalid_argument("rouge_n: n must be >= 1");
  const auto cand = ngram_counts(candidate, n);
  const auto ref = ngram_counts(reference, n);
  long cand_total = 0, ref_total = 0, matches = 0;
  for (const auto& [gram, count] : cand) cand_total += count;
  for (const auto& [gram, count] : ref) {
    ref_total += count;
    auto it = cand.find(gram);
    if (it != cand.end()) matches += std::min(count, it->second);  // clipped
  }
  return from_counts(matches, cand_total, ref_total);
}

RougeScore rouge_l(std::span<const std::string> candidate,
                   std::span<const std::string> reference) {
  const std::size_t m = candidate.size(), r = reference.size();
  if (m == 0 || r == 0) return {};
  // Standard LCS table, rolling rows.
  std::vector<long> prev(r + 1, 0), curr(r + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      if (candidate[i - 1] == reference[j - 1])
        curr[j] = prev[j - 1] + 1;
      else
        curr[j] = std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return from_counts(prev[r], static_cast<long>(m), static_cast<long>(r));
}

RougeScore rouge_score(std::span<const std::string> candidate,
                       std::span<const std::string> reference,
                       RougeMetric metric) {
  switch (metric) {
    case RougeMetric::Rouge1: return rouge_n(candidate, reference, 1);
    case RougeMetric::Rouge2: return rouge_n(candidate, reference, 2);
    case RougeMetric::RougeL: return rouge_l(candidate, reference);
  }
  return {};
}

RougeScore max_aggregate(std::span<const std::string> candidate,
                         const std::vector<std::vector<std::string>>& references,
                         RougeMetric metric) {
  if (references.empty())
    throw std::invalid_argument("max_aggregate: no references available");
  RougeScore best;
  bool first = true;
  for (const auto& reference : references) {
    RougeScore score = rouge_score(candidate, reference, metric);
    if (first || score.f1 > best.f1) best = score;
    first = false;
  }
  return best;
}

std::vector<std::string> rouge_tokens(std::string_view text,
                                      const StopwordSet* stopwords) {
  return tokenize(text, stopwords);
}

}  // namespace revtk
