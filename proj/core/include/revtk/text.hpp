#ifndef REVTK_TEXT_HPP
#define REVTK_TEXT_HPP

#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace revtk {

/// A multiset of tokens plus its total count.
struct TokenBag {
  std::map<std::string, long> counts;  // ordered so iteration is deterministic
  long total = 0;

  void add(const std::string& token, long n = 1) {
    counts[token] += n;
    total += n;
  }
  bool empty() const { return total == 0; }
};

class StopwordSet {
 public:
  StopwordSet() = default;

  /// Builds the set from raw words; each entry is normalized the same way
  /// preprocess() normalizes tokens (lowercased, punctuation removed) so that
  /// e.g. "aren't" matches the post-normalization token "arent".
  explicit StopwordSet(const std::vector<std::string>& words);

  bool contains(const std::string& token) const {
    return words_.count(token) != 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// The bundled ~170-word English stopword list.
const std::vector<std::string>& default_stopwords();
const StopwordSet& default_stopword_set();

/// Splits text into sentences on '.', '!' or '?' followed by whitespace and
/// an uppercase letter or digit. A '.' that closes a known abbreviation
/// ("Fig.", "et al.", "e.g.", ...) never ends a sentence. Sentences are
/// trimmed; none is empty. Joining the results with single spaces preserves
/// every non-whitespace character of the input in order.
std::vector<std::string> sentence_split(std::string_view text);

/// Lowercases, deletes punctuation characters, splits on whitespace, and
/// (when a stopword set is given) drops stopwords. Token order is preserved.
std::vector<std::string> tokenize(std::string_view text,
                                  const StopwordSet* stopwords = nullptr);

/// tokenize() with the given stopword set, folded into a multiset.
TokenBag preprocess(std::string_view text, const StopwordSet& stopwords);

/// preprocess() with the bundled stopword list.
TokenBag preprocess(std::string_view text);

std::string lowercase(std::string_view text);

/// Joins tokens with single spaces.
std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace revtk

#endif  // REVTK_TEXT_HPP
