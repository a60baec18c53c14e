#ifndef REVTK_TOOLS_COMMANDS_HPP
#define REVTK_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "revtk/config.hpp"

namespace revtk::cli {

struct ExtractArgs {
  std::string method;
  std::filesystem::path paper;
  std::optional<std::filesystem::path> refs;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_sentences;
  std::optional<int> budget;  // oracle only; defaults to max_sentences
  bool sample_final = false;
  std::filesystem::path out;
};

struct EvaluateArgs {
  std::filesystem::path papers_dir;
  std::filesystem::path reviews;
  std::optional<std::filesystem::path> meta;
  std::optional<std::filesystem::path> refs;
  std::optional<std::filesystem::path> judgments;
  std::optional<std::filesystem::path> similarity;
  std::filesystem::path out;
};

struct RefineArgs {
  std::filesystem::path in;
  std::filesystem::path out;
  std::optional<std::filesystem::path> trace;
};

struct SpansArgs {
  std::filesystem::path in;
  std::filesystem::path out;
};

struct BiasArgs {
  std::string criterion;
  std::filesystem::path groups;
  std::filesystem::path reviews_ref;
  std::filesystem::path reviews_gen;
  std::string g0_label = "G0";
  std::string g1_label = "G1";
  bool per_paper = false;
  std::filesystem::path out;
  std::optional<std::filesystem::path> svg;
  std::optional<std::filesystem::path> csv;
};

struct AnnoQaArgs {
  std::filesystem::path predictions;
  std::vector<std::filesystem::path> kept;   // exactly 3
  std::vector<std::filesystem::path> added;  // exactly 3
  std::filesystem::path out;
};

void run_extract(const ToolConfig& config, const ExtractArgs& args);
void run_evaluate(const ToolConfig& config, const EvaluateArgs& args);
void run_refine(const ToolConfig& config, const RefineArgs& args);
void run_spans(const ToolConfig& config, const SpansArgs& args);
void run_bias(const ToolConfig& config, const BiasArgs& args);
void run_annoqa(const ToolConfig& config, const AnnoQaArgs& args);

}  // namespace revtk::cli

#endif  // REVTK_TOOLS_COMMANDS_HPP
