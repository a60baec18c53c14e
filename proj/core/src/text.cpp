#include "revtk/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace revtk {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}
bool is_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}
bool is_upper(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0;
}
bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}
char to_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Abbreviations whose trailing '.' never ends a sentence. Compared against
// the lowercased word ending at the period ("al." also covers "et al.").
constexpr std::array<std::string_view, 24> kAbbreviations = {
    "al.",   "fig.",  "figs.", "eq.",   "eqs.",   "tab.",  "sec.",   "secs.",
    "e.g.",  "i.e.",  "cf.",   "vs.",   "resp.",  "no.",   "nos.",   "dr.",
    "mr.",   "mrs.",  "ms.",   "prof.", "ref.",   "refs.", "ch.",    "approx.",
};

bool is_abbreviation(std::string_view text, std::size_t period_pos) {
  // Word = maximal run of non-space characters ending at the period.
  std::size_t begin = period_pos;
  while (begin > 0 && !is_space(text[begin - 1])) --begin;
  std::string word(text.substr(begin, period_pos - begin + 1));
  std::transform(word.begin(), word.end(), word.begin(), to_lower);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

StopwordSet::StopwordSet(const std::vector<std::string>& words) {
  for (const auto& word : words) {
    for (const auto& token : tokenize(word)) words_.insert(token);
  }
}

const std::vector<std::string>& default_stopwords();  // default_data.cpp

const StopwordSet& default_stopword_set() {
  static const StopwordSet set(default_stopwords());
  return set;
}

std::vector<std::string> sentence_split(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    // Sentence ends only before whitespace followed by an uppercase letter
    // or a digit.
    std::size_t next = i + 1;
    if (next >= text.size() || !is_space(text[next])) continue;
    while (next < text.size() && is_space(text[next])) ++next;
    if (next >= text.size() || !(is_upper(text[next]) || is_digit(text[next])))
      continue;
    if (c == '.' && is_abbreviation(text, i)) continue;
    auto sentence = trim(text.substr(start, i + 1 - start));
    if (!sentence.empty()) sentences.emplace_back(sentence);
    start = next;
  }
  auto tail = trim(text.substr(start));
  if (!tail.empty()) sentences.emplace_back(tail);
  return sentences;
}

std::vector<std::string> tokenize(std::string_view text,
                                  const StopwordSet* stopwords) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty() &&
        (stopwords == nullptr || !stopwords->contains(current))) {
      tokens.push_back(current);
    }
    current.clear();
  };
  for (char c : text) {
    if (is_space(c)) {
      flush();
    } else if (!is_punct(c)) {  // punctuation characters are deleted
      current.push_back(to_lower(c));
    }
  }
  flush();
  return tokens;
}

TokenBag preprocess(std::string_view text, const StopwordSet& stopwords) {
  TokenBag bag;
  for (auto& token : tokenize(text, &stopwords)) bag.add(token);
  return bag;
}

TokenBag preprocess(std::string_view text) {
  return preprocess(text, default_stopword_set());
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), to_lower);
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

}  // namespace revtk
