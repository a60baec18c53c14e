#include "revtk/paper.hpp"

#include <stdexcept>

#include "revtk/text.hpp"

namespace revtk {

ParsedPaper ParsedPaper::from_texts(
    std::string id, std::string title, std::string_view abstract_text,
    const std::vector<std::pair<std::string, std::string>>& section_texts,
    Decision decision) {
  ParsedPaper paper;
  paper.id = std::move(id);
  paper.title = std::move(title);
  paper.abstract_sentences = sentence_split(abstract_text);
  paper.decision = decision;
  for (const auto& [heading, text] : section_texts) {
    paper.sections.push_back({heading, sentence_split(text)});
  }
  return paper;
}

std::size_t ParsedPaper::sentence_count() const {
  std::size_t n = abstract_sentences.size();
  for (const auto& section : sections) n += section.sentences.size();
  return n;
}

const std::string& ParsedPaper::sentence(std::size_t global_index) const {
  if (global_index < abstract_sentences.size())
    return abstract_sentences[global_index];
  std::size_t offset = abstract_sentences.size();
  for (const auto& section : sections) {
    if (global_index < offset + section.sentences.size())
      return section.sentences[global_index - offset];
    offset += section.sentences.size();
  }
  throw std::out_of_range("sentence index " + std::to_string(global_index) +
                          " out of range for paper " + id);
}

std::pair<std::size_t, std::size_t> ParsedPaper::section_range(
    std::size_t section_index) const {
  if (section_index >= sections.size())
    throw std::out_of_range("section index out of range for paper " + id);
  std::size_t first = abstract_sentences.size();
  for (std::size_t s = 0; s < section_index; ++s)
    first += sections[s].sentences.size();
  return {first, first + sections[section_index].sentences.size()};
}

}  // namespace revtk
