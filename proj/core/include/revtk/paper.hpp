#ifndef REVTK_PAPER_HPP
#define REVTK_PAPER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace revtk {

enum class Decision { Accept, Reject };

/// Accept -> +1, Reject -> -1.
inline int decision_value(Decision d) { return d == Decision::Accept ? 1 : -1; }

struct Section {
  std::string heading;
  std::vector<std::string> sentences;
};

/// A paper's structured text plus decision and group metadata.
///
/// Sentence indices are global and 0-based: the abstract's sentences come
/// first, followed by each section's sentences in document order. Keeping the
/// abstract in the index space lets every extraction result, including hybrid
/// ones that start from the abstract, be expressed as one increasing index
/// list.
struct ParsedPaper {
  std::string id;
  std::string title;
  std::vector<std::string> abstract_sentences;
  std::vector<Section> sections;
  Decision decision = Decision::Accept;
  std::map<std::string, std::string> groups;  // criterion name -> group label

  /// Builds a paper from raw text blocks, sentence-splitting each one.
  static ParsedPaper from_texts(
      std::string id, std::string title, std::string_view abstract_text,
      const std::vector<std::pair<std::string, std::string>>& section_texts,
      Decision decision = Decision::Accept);

  std::size_t sentence_count() const;
  const std::string& sentence(std::size_t global_index) const;  // throws std::out_of_range

  /// Global index range [first, last) of section `section_index`.
  std::pair<std::size_t, std::size_t> section_range(
      std::size_t section_index) const;
};

}  // namespace revtk

#endif  // REVTK_PAPER_HPP
