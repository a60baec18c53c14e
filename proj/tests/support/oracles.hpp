// Independent brute-force reference implementations used by the unit and
// acceptance suites. Everything here favors obviousness over speed and never
// shares logic with the library code it checks.

#ifndef REVTK_TESTS_ORACLES_HPP
#define REVTK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "revtk/aspect.hpp"
#include "revtk/paper.hpp"
#include "revtk/rouge.hpp"
#include "revtk/text.hpp"

namespace revtk::test {

// --------------------------------------------------------------------------
// ROUGE
// --------------------------------------------------------------------------

// Clipped n-gram matches by pairing every reference n-gram with one unused
// equal candidate n-gram.
inline long bf_ngram_matches(const std::vector<std::string>& candidate,
                             const std::vector<std::string>& reference,
                             int n) {
  auto grams = [n](const std::vector<std::string>& tokens) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i)
      out.emplace_back(tokens.begin() + i, tokens.begin() + i + n);
    return out;
  };
  const auto cand = grams(candidate);
  const auto ref = grams(reference);
  std::vector<char> used(cand.size(), 0);
  long matches = 0;
  for (const auto& r : ref) {
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (!used[c] && cand[c] == r) {
        used[c] = 1;
        ++matches;
        break;
      }
    }
  }
  return matches;
}

inline long bf_ngram_total(const std::vector<std::string>& tokens, int n) {
  return tokens.size() >= static_cast<std::size_t>(n)
             ? static_cast<long>(tokens.size()) - n + 1
             : 0;
}

// LCS length by enumerating every subsequence of the shorter list and
// testing it against the other. Exponential; lists must stay short.
inline long bf_lcs(const std::vector<std::string>& a,
                   const std::vector<std::string>& b) {
  const auto& shorter = a.size() <= b.size() ? a : b;
  const auto& longer = a.size() <= b.size() ? b : a;
  const std::size_t m = shorter.size();
  long best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::size_t j = 0;
    long length = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask & (1ull << i))) continue;
      while (j < longer.size() && longer[j] != shorter[i]) ++j;
      if (j == longer.size()) {
        ok = false;
      } else {
        ++j;
        ++length;
      }
    }
    if (ok) best = std::max(best, length);
  }
  return best;
}

inline RougeScore score_from_counts(long matches, long cand_total,
                                    long ref_total) {
  RougeScore s;
  if (cand_total == 0 || ref_total == 0) return s;
  s.precision = static_cast<double>(matches) / cand_total;
  s.recall = static_cast<double>(matches) / ref_total;
  if (s.precision + s.recall > 0)
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

inline RougeScore bf_rouge_n(const std::vector<std::string>& candidate,
                             const std::vector<std::string>& reference,
                             int n) {
  return score_from_counts(bf_ngram_matches(candidate, reference, n),
                           bf_ngram_total(candidate, n),
                           bf_ngram_total(reference, n));
}

inline RougeScore bf_rouge_l(const std::vector<std::string>& candidate,
                             const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) return {};
  return score_from_counts(bf_lcs(candidate, reference),
                           static_cast<long>(candidate.size()),
                           static_cast<long>(reference.size()));
}

// --------------------------------------------------------------------------
// Entropy / cross-entropy extraction
// --------------------------------------------------------------------------

// -sum p ln p over the preprocessed tokens of the chosen sentences.
inline double bf_selection_entropy(const ParsedPaper& paper,
                                   const std::vector<std::size_t>& selection) {
  std::map<std::string, long> counts;
  long total = 0;
  for (std::size_t index : selection) {
    for (const auto& token :
         tokenize(paper.sentence(index), &default_stopword_set())) {
      ++counts[token];
      ++total;
    }
  }
  double h = 0.0;
  for (const auto& [token, count] : counts) {
    const double p = static_cast<double>(count) / static_cast<double>(total);
    h -= p * std::log(p);
  }
  return total == 0 ? 0.0 : h;
}

// Best entropy over every subset of `pool` with at most `budget` elements.
inline double bf_best_entropy(const ParsedPaper& paper,
                              const std::vector<std::size_t>& pool,
                              int budget,
                              std::vector<std::size_t>* best_subset = nullptr) {
  const std::size_t n = pool.size();
  double best = 0.0;
  if (best_subset) best_subset->clear();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1ull << j)) subset.push_back(pool[j]);
    }
    if (subset.size() > static_cast<std::size_t>(budget)) continue;
    const double h = bf_selection_entropy(paper, subset);
    if (h > best) {
      best = h;
      if (best_subset) *best_subset = subset;
    }
  }
  return best;
}

// --------------------------------------------------------------------------
// Annotation QA (set formulas with greedy maximal-overlap matching,
// recoded from scratch: repeated full scans instead of sort-and-sweep)
// --------------------------------------------------------------------------

inline long bf_span_overlap(const AspectSpan& a, const AspectSpan& b) {
  if (a.aspect != b.aspect || a.polarity != b.polarity) return 0;
  const long lo = static_cast<long>(std::max(a.start, b.start));
  const long hi = static_cast<long>(std::min(a.end, b.end));
  return std::max(0l, hi - lo);
}

inline std::size_t bf_common_pairs(const std::vector<AspectSpan>& lhs,
                                   const std::vector<AspectSpan>& rhs,
                                   double threshold) {
  std::vector<char> used_l(lhs.size(), 0), used_r(rhs.size(), 0);
  std::size_t matched = 0;
  while (true) {
    long best_overlap = 0;
    std::size_t best_i = lhs.size(), best_j = rhs.size();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (used_l[i]) continue;
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        if (used_r[j]) continue;
        const long shared = bf_span_overlap(lhs[i], rhs[j]);
        if (shared <= 0) continue;
        const double shortest = static_cast<double>(
            std::min(lhs[i].length(), rhs[j].length()));
        if (static_cast<double>(shared) / shortest <= threshold) continue;
        if (shared > best_overlap) {
          best_overlap = shared;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i == lhs.size()) break;
    used_l[best_i] = used_r[best_j] = 1;
    ++matched;
  }
  return matched;
}

inline std::size_t bf_common_triples(const std::vector<AspectSpan>& a,
                                     const std::vector<AspectSpan>& b,
                                     const std::vector<AspectSpan>& c,
                                     double threshold) {
  std::vector<char> ua(a.size(), 0), ub(b.size(), 0), uc(c.size(), 0);
  std::size_t matched = 0;
  while (true) {
    long best_overlap = 0;
    std::size_t bi = a.size(), bj = b.size(), bk = c.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (ua[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (ub[j]) continue;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (uc[k]) continue;
          if (a[i].aspect != b[j].aspect || a[i].aspect != c[k].aspect ||
              a[i].polarity != b[j].polarity || a[i].polarity != c[k].polarity)
            continue;
          const long lo = static_cast<long>(
              std::max({a[i].start, b[j].start, c[k].start}));
          const long hi =
              static_cast<long>(std::min({a[i].end, b[j].end, c[k].end}));
          const long shared = std::max(0l, hi - lo);
          if (shared <= 0) continue;
          const double shortest = static_cast<double>(
              std::min({a[i].length(), b[j].length(), c[k].length()}));
          if (static_cast<double>(shared) / shortest <= threshold) continue;
          if (shared > best_overlap) {
            best_overlap = shared;
            bi = i;
            bj = j;
            bk = k;
          }
        }
      }
    }
    if (bi == a.size()) break;
    ua[bi] = ub[bj] = uc[bk] = 1;
    ++matched;
  }
  return matched;
}

// --------------------------------------------------------------------------
// Random input generators (all take an explicit seeded engine)
// --------------------------------------------------------------------------

inline std::vector<std::string> random_token_list(std::mt19937_64& rng,
                                                  std::size_t max_length = 12,
                                                  std::size_t alphabet = 5) {
  static const std::vector<std::string> symbols = {"a", "b", "c", "d", "e"};
  const std::size_t length = rng() % (max_length + 1);
  std::vector<std::string> tokens;
  tokens.reserve(length);
  for (std::size_t i = 0; i < length; ++i)
    tokens.push_back(symbols[rng() % std::min(alphabet, symbols.size())]);
  return tokens;
}

inline TokenLabel random_label(std::mt19937_64& rng) {
  const int pick = static_cast<int>(rng() % 16);
  if (pick == 0) return TokenLabel::outside();
  if (pick == 1) return TokenLabel::tagged(Aspect::Summary, Polarity::None);
  const Aspect aspect = kPolarAspects[(pick - 2) % kPolarAspects.size()];
  return TokenLabel::tagged(
      aspect, (pick % 2) == 0 ? Polarity::Positive : Polarity::Negative);
}

// Token/label sequences with realistic run structure: labels persist with
// probability ~3/4 and the token pool mixes words with punctuation.
inline std::pair<std::vector<std::string>, std::vector<TokenLabel>>
random_labeled_sequence(std::mt19937_64& rng, std::size_t max_length = 40) {
  static const std::vector<std::string> words = {
      "the",  "model", "is",     "good",  "results", "novel", "paper",
      "weak", "clear", "method", "section", "strong", "idea",  "work",
      ".",    ",",     "!",      "-",     "...",     "2",     "fine.",
  };
  const std::size_t length = 1 + rng() % max_length;
  std::vector<std::string> tokens(length);
  std::vector<TokenLabel> labels(length);
  TokenLabel current = random_label(rng);
  for (std::size_t i = 0; i < length; ++i) {
    tokens[i] = words[rng() % words.size()];
    if (rng() % 4 == 0) current = random_label(rng);
    labels[i] = current;
  }
  return {std::move(tokens), std::move(labels)};
}

inline AspectSpan random_span(std::mt19937_64& rng, std::size_t token_count,
                              bool polar_only = false) {
  const Aspect aspect =
      polar_only ? kPolarAspects[rng() % kPolarAspects.size()]
                 : kAllAspects[rng() % kAllAspects.size()];
  const Polarity polarity =
      aspect == Aspect::Summary
          ? Polarity::None
          : (rng() % 2 == 0 ? Polarity::Positive : Polarity::Negative);
  const std::size_t start = rng() % token_count;
  const std::size_t length = 1 + rng() % std::min<std::size_t>(8, token_count - start);
  return {aspect, polarity, start, start + length};
}

}  // namespace revtk::test

#endif  // REVTK_TESTS_ORACLES_HPP
