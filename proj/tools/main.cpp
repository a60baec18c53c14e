// revtk: analyze, score and audit peer reviews of scientific papers.
//
// Subcommands: extract, refine, spans, evaluate, bias, annoqa. All inputs
// are validated up front; outputs are written atomically and runs with the
// same inputs and seed are byte-identical.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "revtk/errors.hpp"
#include "revtk/io.hpp"
#include "revtk/version.hpp"

namespace {

using revtk::ToolConfig;
namespace cli = revtk::cli;

void print_error(const std::exception& e) {
  revtk::json err = {{"error", {{"message", e.what()}}}};
  if (const auto* parse = dynamic_cast<const revtk::ParseError*>(&e)) {
    err["error"]["file"] = parse->file();
    if (parse->line() > 0) err["error"]["line"] = parse->line();
  }
  std::cerr << err.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"peer-review analysis toolkit"};
  app.set_version_flag("--version", std::string(revtk::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  if (const char* env = std::getenv("REVTK_CONFIG")) config_path = env;
  app.add_option("--config", config_path,
                 "JSON config file (or set REVTK_CONFIG)");
  int jobs = -1;
  app.add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  // global flags may appear after the subcommand
  app.fallthrough();

  cli::ExtractArgs extract;
  auto* extract_cmd =
      app.add_subcommand("extract", "select salient sentences from a paper");
  extract_cmd->add_option("--method", extract.method, "extraction strategy")
      ->required()
      ->check(CLI::IsMember({"intro", "ce", "oracle", "hybrid"}));
  extract_cmd->add_option("--paper", extract.paper, "paper JSON file")
      ->required();
  extract_cmd->add_option("--refs", extract.refs,
                          "reference reviews JSONL (oracle)");
  extract_cmd->add_option("--seed", extract.seed, "random seed");
  extract_cmd->add_option("--max-sentences", extract.max_sentences,
                          "selection cap");
  extract_cmd->add_option("--budget", extract.budget,
                          "oracle greedy budget (defaults to the cap)");
  extract_cmd->add_flag("--sample-final", extract.sample_final,
                        "sample the final CE selection instead of "
                        "thresholding the converged probabilities");
  extract_cmd->add_option("--out", extract.out, "output JSON")->required();

  cli::RefineArgs refine;
  auto* refine_cmd = app.add_subcommand(
      "refine", "repair token labels with the seven heuristic rules");
  refine_cmd->add_option("--in", refine.in, "tagged reviews JSONL")->required();
  refine_cmd->add_option("--out", refine.out, "refined reviews JSONL")
      ->required();
  refine_cmd->add_option("--trace", refine.trace, "per-review edit trace JSONL");

  cli::SpansArgs spans;
  auto* spans_cmd =
      app.add_subcommand("spans", "list the aspect spans of labeled reviews");
  spans_cmd->add_option("--in", spans.in, "reviews JSONL")->required();
  spans_cmd->add_option("--out", spans.out, "spans JSONL")->required();

  cli::EvaluateArgs evaluate;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "compute the review metric suite");
  evaluate_cmd->add_option("--papers", evaluate.papers_dir,
                           "directory of paper JSON files")
      ->required();
  evaluate_cmd->add_option("--reviews", evaluate.reviews,
                           "reviews to evaluate (JSONL)")
      ->required();
  evaluate_cmd->add_option("--meta", evaluate.meta, "meta-reviews JSONL");
  evaluate_cmd->add_option("--refs", evaluate.refs,
                           "reference reviews JSONL for ROUGE");
  evaluate_cmd->add_option("--judgments", evaluate.judgments,
                           "human judgments JSON");
  evaluate_cmd->add_option("--similarity", evaluate.similarity,
                           "precomputed similarity CSV");
  evaluate_cmd->add_option("--out", evaluate.out, "report JSON")->required();

  cli::BiasArgs bias;
  auto* bias_cmd =
      app.add_subcommand("bias", "audit aspect-score disparities by group");
  bias_cmd->add_option("--criterion", bias.criterion, "partition name")
      ->required();
  bias_cmd->add_option("--groups", bias.groups, "paper_id,group CSV")
      ->required();
  bias_cmd->add_option("--reviews-ref", bias.reviews_ref,
                       "reference reviews JSONL")
      ->required();
  bias_cmd->add_option("--reviews-gen", bias.reviews_gen,
                       "generated reviews JSONL")
      ->required();
  bias_cmd->add_option("--g0-label", bias.g0_label, "group 0 label in the CSV");
  bias_cmd->add_option("--g1-label", bias.g1_label, "group 1 label in the CSV");
  bias_cmd->add_flag("--per-paper", bias.per_paper,
                     "average reviews within each paper first");
  bias_cmd->add_option("--out", bias.out, "bias report JSON")->required();
  bias_cmd->add_option("--svg", bias.svg, "spider chart SVG");
  bias_cmd->add_option("--csv", bias.csv, "spider chart CSV");

  cli::AnnoQaArgs annoqa;
  auto* annoqa_cmd = app.add_subcommand(
      "annoqa", "aspect precision/recall from annotator judgments");
  annoqa_cmd->add_option("--predictions", annoqa.predictions,
                         "predicted spans JSONL")
      ->required();
  annoqa_cmd
      ->add_option("--kept", annoqa.kept,
                   "three kept-span JSONL files (one per annotator)")
      ->required()
      ->expected(3);
  annoqa_cmd
      ->add_option("--added", annoqa.added,
                   "three added-span JSONL files (one per annotator)")
      ->required()
      ->expected(3);
  annoqa_cmd->add_option("--out", annoqa.out, "QA report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(e);
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  try {
    ToolConfig config;
    if (!config_path.empty()) config = ToolConfig::load(config_path);
    if (jobs >= 0) config.parallelism = jobs;
    if (extract_cmd->parsed()) cli::run_extract(config, extract);
    if (refine_cmd->parsed()) cli::run_refine(config, refine);
    if (spans_cmd->parsed()) cli::run_spans(config, spans);
    if (evaluate_cmd->parsed()) cli::run_evaluate(config, evaluate);
    if (bias_cmd->parsed()) cli::run_bias(config, bias);
    if (annoqa_cmd->parsed()) cli::run_annoqa(config, annoqa);
  } catch (const std::exception& e) {
    print_error(e);
    return 1;
  }
  return 0;
}
