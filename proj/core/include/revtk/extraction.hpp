#ifndef REVTK_EXTRACTION_HPP
#define REVTK_EXTRACTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revtk/paper.hpp"
#include "revtk/text.hpp"

namespace revtk {

enum class ExtractionMethod { Intro, CrossEntropy, Oracle, Hybrid };

std::string_view extraction_method_name(ExtractionMethod method);
std::optional<ExtractionMethod> extraction_method_from_name(
    std::string_view name);

/// Default seed used whenever none is configured, so pipelines are
/// reproducible out of the box.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Extraction never looks past the first 250 sentences of a paper.
inline constexpr std::size_t kExtractionSentenceLimit = 250;

struct ExtractionResult {
  std::string paper_id;
  ExtractionMethod method = ExtractionMethod::Intro;
  std::vector<std::size_t> sentence_indices;  // strictly increasing
  std::optional<double> objective;  // entropy in nats (CE/Hybrid), mean ROUGE (Oracle)
  std::optional<std::uint64_t> seed;
};

/// Cross-entropy method hyperparameters.
struct CEConfig {
  int sample_count = 1000;          // N
  double elite_fraction = 0.05;     // rho
  double smoothing = 0.7;           // alpha
  int max_sentences = 30;
  int stall_iterations = 3;
  int max_iterations = 100;
  int resample_cap_multiplier = 20;
  std::uint64_t seed = kDefaultSeed;
  bool sample_final = false;  // sample from the converged probabilities
                              // instead of thresholding them at 0.5

  void validate() const;  // throws std::invalid_argument
};

/// The 48 bundled filter keywords.
const std::vector<std::string>& default_keywords();

/// Sentences (within the first 250) containing a keyword or one of its
/// inflections. A token matches keyword k after lowercasing when it equals
/// k, k+{s,es,ed,d,ing}, or, for keywords ending in 'e', the stem without
/// the 'e' plus {ed,ing}. Hyphenated keywords match as lowercase substrings
/// on dash-normalized sentence text.
std::vector<std::size_t> keyword_filter(const ParsedPaper& paper,
                                        std::span<const std::string> keywords);

/// Shannon entropy (nats) of the unigram distribution of the selected
/// sentences after preprocessing (lowercase, punctuation and stopwords
/// removed). Empty surviving bag -> 0.
double entropy_objective(std::span<const std::size_t> sentence_indices,
                         const ParsedPaper& paper,
                         const StopwordSet& stopwords = default_stopword_set());

double entropy_of_bag(const TokenBag& bag);

/// Cross-entropy method over binary sentence-inclusion vectors on the
/// keyword-filtered pool, maximizing entropy_objective under the
/// max_sentences cap. Deterministic given config.seed.
///
/// The final selection thresholds the converged probabilities at 0.5; when
/// the best sample seen during the search scores strictly higher (exactly
/// tied optima can pin the probabilities at an interior point), that sample
/// is returned instead.
///
/// Throws std::invalid_argument when the pool is empty and std::runtime_error
/// when valid samples cannot be drawn within the resample cap.
ExtractionResult ce_extract(const ParsedPaper& paper, const CEConfig& config,
                            std::span<const std::string> keywords);
ExtractionResult ce_extract(const ParsedPaper& paper, const CEConfig& config);

struct OracleStep {
  std::size_t sentence_index;
  double objective;  // mean ROUGE-1/2/L F1 after adding this sentence
};

/// Greedy selection maximizing the mean of ROUGE-1, ROUGE-2 and ROUGE-L F1
/// of the concatenated selection against the reference. Stops when no
/// addition strictly improves the mean or the budget is reached; ties go to
/// the smaller sentence index. Throws std::invalid_argument on an empty
/// reference.
ExtractionResult oracle_extract(const ParsedPaper& paper,
                                std::span<const std::string> reference_tokens,
                                int budget,
                                std::vector<OracleStep>* trace = nullptr);

/// Sentence indices of the first section whose heading contains
/// "introduction" (case-insensitive), else the first section. Throws
/// std::invalid_argument when the paper has no sections.
ExtractionResult intro_extract(const ParsedPaper& paper);

/// Abstract sentences as a prefix block followed by the CE extraction, with
/// duplicate indices removed. When the CE pool is empty but the abstract is
/// not, returns the abstract alone.
ExtractionResult hybrid_extract(const ParsedPaper& paper,
                                const CEConfig& config,
                                std::span<const std::string> keywords);
ExtractionResult hybrid_extract(const ParsedPaper& paper,
                                const CEConfig& config);

}  // namespace revtk

#endif  // REVTK_EXTRACTION_HPP
