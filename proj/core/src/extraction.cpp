#include "revtk/extraction.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "revtk/rouge.hpp"

namespace revtk {

std::string_view extraction_method_name(ExtractionMethod method) {
  switch (method) {
    case ExtractionMethod::Intro: return "intro";
    case ExtractionMethod::CrossEntropy: return "ce";
    case ExtractionMethod::Oracle: return "oracle";
    case ExtractionMethod::Hybrid: return "hybrid";
  }
  return "";
}

std::optional<ExtractionMethod> extraction_method_from_name(
    std::string_view name) {
  if (name == "intro") return ExtractionMethod::Intro;
  if (name == "ce") return ExtractionMethod::CrossEntropy;
  if (name == "oracle") return ExtractionMethod::Oracle;
  if (name == "hybrid") return ExtractionMethod::Hybrid;
  return std::nullopt;
}

void CEConfig::validate() const {
  if (sample_count < 1)
    throw std::invalid_argument("ce: sample_count must be positive");
  if (!(elite_fraction > 0.0 && elite_fraction < 1.0))
    throw std::invalid_argument("ce: elite_fraction must be in (0,1)");
  if (!(smoothing > 0.0 && smoothing <= 1.0))
    throw std::invalid_argument("ce: smoothing must be in (0,1]");
  if (max_sentences < 1)
    throw std::invalid_argument("ce: max_sentences must be positive");
  if (stall_iterations < 1)
    throw std::invalid_argument("ce: stall_iterations must be positive");
  if (max_iterations < 1)
    throw std::invalid_argument("ce: max_iterations must be positive");
  if (resample_cap_multiplier < 1)
    throw std::invalid_argument("ce: resample_cap_multiplier must be positive");
}

namespace {

bool is_punct_char(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

// Strips punctuation off both ends so "method." matches keyword "method".
std::string_view strip_outer_punct(std::string_view token) {
  std::size_t b = 0, e = token.size();
  while (b < e && is_punct_char(token[b])) ++b;
  while (e > b && is_punct_char(token[e - 1])) --e;
  return token.substr(b, e - b);
}

// En/em dashes and friends folded to '-', so hyphenated keywords match text
// regardless of which dash the PDF used.
std::string normalize_dashes(std::string_view text) {
  static const std::string_view dashes[] = {
      "‐", "‑", "‒", "–", "—", "−"};
  std::string out(text);
  for (std::string_view dash : dashes) {
    std::size_t pos = 0;
    while ((pos = out.find(dash, pos)) != std::string::npos)
      out.replace(pos, dash.size(), "-");
  }
  return out;
}

// All accepted surface forms of a keyword: the word itself plus the
// s/es/ed/d/ing suffixes, and for keywords ending in 'e' the e-dropped
// ed/ing forms.
void add_inflections(const std::string& keyword,
                     std::unordered_set<std::string>& forms) {
  forms.insert(keyword);
  for (const char* suffix : {"s", "es", "ed", "d", "ing"})
    forms.insert(keyword + suffix);
  if (!keyword.empty() && keyword.back() == 'e') {
    const std::string stem = keyword.substr(0, keyword.size() - 1);
    forms.insert(stem + "ed");
    forms.insert(stem + "ing");
  }
}

// Unigram counts with interned token ids, fixed per paper so repeated
// entropy evaluations stay cheap.
struct SentenceBags {
  std::vector<std::vector<std::pair<int, long>>> per_sentence;
  std::size_t vocabulary_size = 0;

  SentenceBags(const ParsedPaper& paper, std::span<const std::size_t> indices,
               const StopwordSet& stopwords) {
    std::unordered_map<std::string, int> ids;
    per_sentence.reserve(indices.size());
    for (std::size_t index : indices) {
      TokenBag bag = preprocess(paper.sentence(index), stopwords);
      std::vector<std::pair<int, long>> counts;
      counts.reserve(bag.counts.size());
      for (const auto& [token, count] : bag.counts) {
        auto [it, unused] = ids.emplace(token, static_cast<int>(ids.size()));
        counts.emplace_back(it->second, count);
      }
      per_sentence.push_back(std::move(counts));
    }
    vocabulary_size = ids.size();
  }
};

// Entropy of the merged counts of the masked sentences. `scratch` must be a
// zeroed vector of vocabulary size; it is zeroed again before returning.
double masked_entropy(const SentenceBags& bags, std::span<const char> mask,
                      std::vector<long>& scratch, std::vector<int>& touched) {
  long total = 0;
  for (std::size_t s = 0; s < mask.size(); ++s) {
    if (!mask[s]) continue;
    for (const auto& [id, count] : bags.per_sentence[s]) {
      if (scratch[id] == 0) touched.push_back(id);
      scratch[id] += count;
      total += count;
    }
  }
  double entropy = 0.0;
  if (total > 0) {
    for (int id : touched) {
      const double p = static_cast<double>(scratch[id]) / total;
      entropy -= p * std::log(p);
    }
  }
  for (int id : touched) scratch[id] = 0;
  touched.clear();
  return entropy;
}

double uniform01(std::mt19937_64& rng) {
  // 53 random bits; identical across platforms for a given seed.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr double kGammaStallTolerance = 1e-9;

}  // namespace

std::vector<std::size_t> keyword_filter(const ParsedPaper& paper,
                                        std::span<const std::string> keywords) {
  if (keywords.empty())
    throw std::invalid_argument("keyword_filter: keyword list is empty");

  std::unordered_set<std::string> word_forms;
  std::vector<std::string> substring_keywords;
  for (const auto& keyword : keywords) {
    const std::string lowered = lowercase(keyword);
    if (lowered.find('-') != std::string::npos)
      substring_keywords.push_back(lowered);
    else
      add_inflections(lowered, word_forms);
  }

  const std::size_t limit =
      std::min(paper.sentence_count(), kExtractionSentenceLimit);
  std::vector<std::size_t> selected;
  for (std::size_t index = 0; index < limit; ++index) {
    const std::string sentence = lowercase(paper.sentence(index));
    bool hit = false;
    std::size_t pos = 0;
    while (!hit && pos < sentence.size()) {
      while (pos < sentence.size() &&
             std::isspace(static_cast<unsigned char>(sentence[pos])))
        ++pos;
      std::size_t end = pos;
      while (end < sentence.size() &&
             !std::isspace(static_cast<unsigned char>(sentence[end])))
        ++end;
      if (end > pos) {
        auto token = strip_outer_punct(
            std::string_view(sentence).substr(pos, end - pos));
        if (!token.empty() && word_forms.count(std::string(token))) hit = true;
      }
      pos = end;
    }
    if (!hit && !substring_keywords.empty()) {
      const std::string normalized = normalize_dashes(sentence);
      for (const auto& keyword : substring_keywords) {
        if (normalized.find(keyword) != std::string::npos) {
          hit = true;
          break;
        }
      }
    }
    if (hit) selected.push_back(index);
  }
  return selected;
}

double entropy_of_bag(const TokenBag& bag) {
  if (bag.total <= 0) return 0.0;
  double entropy = 0.0;
  for (const auto& [token, count] : bag.counts) {
    const double p = static_cast<double>(count) / bag.total;
    entropy -= p * std::log(p);
  }
  return entropy;
}

double entropy_objective(std::span<const std::size_t> sentence_indices,
                         const ParsedPaper& paper,
                         const StopwordSet& stopwords) {
  TokenBag merged;
  for (std::size_t index : sentence_indices) {
    for (const auto& token : tokenize(paper.sentence(index), &stopwords))
      merged.add(token);
  }
  return entropy_of_bag(merged);
}

ExtractionResult ce_extract(const ParsedPaper& paper, const CEConfig& config,
                            std::span<const std::string> keywords) {
  config.validate();
  const std::vector<std::size_t> pool = keyword_filter(paper, keywords);
  if (pool.empty()) {
    throw std::invalid_argument("ce_extract: no sentence of paper " + paper.id +
                                " survives the keyword filter");
  }

  const std::size_t n = pool.size();
  const int N = config.sample_count;
  const SentenceBags bags(paper, pool, default_stopword_set());
  std::vector<long> scratch(bags.vocabulary_size, 0);
  std::vector<int> touched;

  // Start at 1/2 everywhere; pools much larger than the sentence cap get a
  // lower start so that most initial samples respect it. At the default cap
  // of 30 this is the pool > 90 trigger with p0 = 35/pool.
  const bool shrink_start =
      n > 3 * static_cast<std::size_t>(config.max_sentences);
  const double start_mass = 7.0 / 6.0 * config.max_sentences;
  const double p0 =
      shrink_start ? std::min(0.5, start_mass / static_cast<double>(n)) : 0.5;
  std::vector<double> p(n, p0);

  std::mt19937_64 rng(config.seed);
  const long draw_cap =
      static_cast<long>(config.resample_cap_multiplier) * static_cast<long>(N);

  auto draw_valid_mask = [&](std::vector<char>& mask, long& draws) {
    while (true) {
      if (draws >= draw_cap) {
        throw std::runtime_error(
            "ce_extract: resample cap exceeded on paper " + paper.id +
            "; the sample/max_sentences configuration is infeasible");
      }
      ++draws;
      int count = 0;
      for (std::size_t j = 0; j < n; ++j) {
        mask[j] = uniform01(rng) < p[j] ? 1 : 0;
        count += mask[j];
      }
      if (count <= config.max_sentences) return;
      // over the cap: drop this sample and redraw
    }
  };

  std::vector<std::vector<char>> masks(N, std::vector<char>(n, 0));
  std::vector<double> objectives(N, 0.0);
  std::vector<double> sorted(N, 0.0);
  std::vector<double> elite_mean(n, 0.0);

  // Best valid sample across all iterations. When the probabilities stall at
  // an interior point (exactly tied optima split the elite mass), the
  // thresholded selection can undershoot; the best sample never does.
  std::vector<char> best_mask(n, 0);
  double best_objective = -1.0;

  double previous_gamma = 0.0;
  int stall = 0;
  for (int t = 1; t <= config.max_iterations; ++t) {
    long draws = 0;
    for (int i = 0; i < N; ++i) {
      draw_valid_mask(masks[i], draws);
      objectives[i] = masked_entropy(bags, masks[i], scratch, touched);
      if (objectives[i] > best_objective) {
        best_objective = objectives[i];
        best_mask = masks[i];
      }
    }

    // gamma_t: the ceil((1-rho)N)-th order statistic of the objectives.
    sorted = objectives;
    std::sort(sorted.begin(), sorted.end());
    const int rank = static_cast<int>(
        std::ceil((1.0 - config.elite_fraction) * static_cast<double>(N)));
    const double gamma = sorted[std::clamp(rank, 1, N) - 1];

    // Elite indicator mean.
    std::fill(elite_mean.begin(), elite_mean.end(), 0.0);
    long elites = 0;
    for (int i = 0; i < N; ++i) {
      if (objectives[i] < gamma) continue;
      ++elites;
      for (std::size_t j = 0; j < n; ++j) elite_mean[j] += masks[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double phat = elite_mean[j] / static_cast<double>(elites);
      p[j] = config.smoothing * phat + (1.0 - config.smoothing) * p[j];
    }

    if (t > 1 && std::abs(gamma - previous_gamma) < kGammaStallTolerance)
      ++stall;
    else
      stall = 0;
    previous_gamma = gamma;
    if (stall >= config.stall_iterations) break;
  }

  // Final selection: threshold the converged probabilities (deterministic),
  // or sample from them when asked for the literal behavior.
  std::vector<std::size_t> chosen;
  if (config.sample_final) {
    std::vector<char> mask(n, 0);
    long draws = 0;
    draw_valid_mask(mask, draws);
    for (std::size_t j = 0; j < n; ++j)
      if (mask[j]) chosen.push_back(j);
  } else {
    for (std::size_t j = 0; j < n; ++j)
      if (p[j] >= 0.5) chosen.push_back(j);
    // Trim overflow by dropping the lowest-probability picks, breaking ties
    // toward the larger index.
    while (chosen.size() > static_cast<std::size_t>(config.max_sentences)) {
      std::size_t drop = 0;
      for (std::size_t k = 1; k < chosen.size(); ++k) {
        if (p[chosen[k]] <= p[chosen[drop]]) drop = k;
      }
      chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    // Keep the best sample instead when it strictly beats the thresholded
    // set (ties go to the threshold selection).
    std::vector<char> chosen_mask(n, 0);
    for (std::size_t j : chosen) chosen_mask[j] = 1;
    if (masked_entropy(bags, chosen_mask, scratch, touched) < best_objective) {
      chosen.clear();
      for (std::size_t j = 0; j < n; ++j)
        if (best_mask[j]) chosen.push_back(j);
    }
  }

  ExtractionResult result;
  result.paper_id = paper.id;
  result.method = ExtractionMethod::CrossEntropy;
  result.seed = config.seed;
  result.sentence_indices.reserve(chosen.size());
  for (std::size_t j : chosen) result.sentence_indices.push_back(pool[j]);
  result.objective = entropy_objective(result.sentence_indices, paper);
  return result;
}

ExtractionResult ce_extract(const ParsedPaper& paper, const CEConfig& config) {
  return ce_extract(paper, config, default_keywords());
}

ExtractionResult oracle_extract(const ParsedPaper& paper,
                                std::span<const std::string> reference_tokens,
                                int budget, std::vector<OracleStep>* trace) {
  if (budget < 1)
    throw std::invalid_argument("oracle_extract: budget must be >= 1");
  // Both sides go through the same normalization so a verbatim sentence
  // match scores 1.
  std::vector<std::string> reference;
  for (const auto& token : reference_tokens) {
    for (auto& piece : tokenize(token)) reference.push_back(std::move(piece));
  }
  if (reference.empty())
    throw std::invalid_argument("oracle_extract: reference is empty");
  if (paper.sentence_count() == 0)
    throw std::invalid_argument("oracle_extract: paper has no sentences");

  const std::size_t limit =
      std::min(paper.sentence_count(), kExtractionSentenceLimit);
  std::vector<std::vector<std::string>> sentence_tokens(limit);
  for (std::size_t i = 0; i < limit; ++i)
    sentence_tokens[i] = tokenize(paper.sentence(i));

  auto mean_rouge = [&](const std::vector<std::size_t>& selection) {
    std::vector<std::string> concatenated;
    for (std::size_t i : selection) {
      concatenated.insert(concatenated.end(), sentence_tokens[i].begin(),
                          sentence_tokens[i].end());
    }
    return (rouge_n(concatenated, reference, 1).f1 +
            rouge_n(concatenated, reference, 2).f1 +
            rouge_l(concatenated, reference).f1) /
           3.0;
  };

  std::vector<std::size_t> selection;
  std::vector<char> used(limit, 0);
  double current = 0.0;
  while (selection.size() < static_cast<std::size_t>(budget)) {
    double best = current;
    std::size_t best_index = limit;
    for (std::size_t i = 0; i < limit; ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> tentative = selection;
      tentative.insert(
          std::upper_bound(tentative.begin(), tentative.end(), i), i);
      const double mean = mean_rouge(tentative);
      if (mean > best) {  // strict improvement; first index wins ties
        best = mean;
        best_index = i;
      }
    }
    if (best_index == limit) break;
    used[best_index] = 1;
    selection.insert(
        std::upper_bound(selection.begin(), selection.end(), best_index),
        best_index);
    current = best;
    if (trace) trace->push_back({best_index, best});
  }

  ExtractionResult result;
  result.paper_id = paper.id;
  result.method = ExtractionMethod::Oracle;
  result.sentence_indices = std::move(selection);
  result.objective = current;
  return result;
}

ExtractionResult intro_extract(const ParsedPaper& paper) {
  if (paper.sections.empty())
    throw std::invalid_argument("intro_extract: paper " + paper.id +
                                " has no sections");
  std::size_t section = 0;
  for (std::size_t s = 0; s < paper.sections.size(); ++s) {
    if (lowercase(paper.sections[s].heading).find("introduction") !=
        std::string::npos) {
      section = s;
      break;
    }
  }
  const auto [first, last] = paper.section_range(section);
  ExtractionResult result;
  result.paper_id = paper.id;
  result.method = ExtractionMethod::Intro;
  for (std::size_t i = first; i < last; ++i)
    result.sentence_indices.push_back(i);
  return result;
}

ExtractionResult hybrid_extract(const ParsedPaper& paper,
                                const CEConfig& config,
                                std::span<const std::string> keywords) {
  const std::size_t abstract_size = paper.abstract_sentences.size();
  ExtractionResult result;
  result.paper_id = paper.id;
  result.method = ExtractionMethod::Hybrid;
  result.seed = config.seed;
  for (std::size_t i = 0; i < abstract_size; ++i)
    result.sentence_indices.push_back(i);

  if (keyword_filter(paper, keywords).empty()) {
    if (abstract_size == 0) {
      throw std::invalid_argument(
          "hybrid_extract: paper " + paper.id +
          " has neither an abstract nor a CE extraction pool");
    }
  } else {
    const ExtractionResult ce = ce_extract(paper, config, keywords);
    for (std::size_t index : ce.sentence_indices) {
      if (index >= abstract_size)  // abstract-block duplicates appear once
        result.sentence_indices.push_back(index);
    }
  }
  result.objective = entropy_objective(result.sentence_indices, paper);
  return result;
}

ExtractionResult hybrid_extract(const ParsedPaper& paper,
                                const CEConfig& config) {
  return hybrid_extract(paper, config, default_keywords());
}

}  // namespace revtk
