#ifndef REVTK_IO_HPP
#define REVTK_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "revtk/errors.hpp"
#include "revtk/extraction.hpp"
#include "revtk/metrics.hpp"
#include "revtk/bias.hpp"
#include "revtk/paper.hpp"
#include "revtk/refine.hpp"
#include "revtk/review.hpp"

namespace revtk {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Loading. All loaders validate schemas and throw ParseError with the file
// name and, for line-oriented formats, the offending line number.
// ---------------------------------------------------------------------------

/// One paper per JSON file: {id, title, abstract, sections:[{heading,text}],
/// decision:"accept"|"reject", groups:{criterion:label}}. Section text and
/// abstract are sentence-split on load.
ParsedPaper load_paper(const std::filesystem::path& path);

/// Every *.json file in a directory, sorted by file name.
std::vector<ParsedPaper> load_papers_dir(const std::filesystem::path& dir);

/// JSONL, one review per line: {review_id, paper_id, tokens:[...],
/// labels:[...]} plus optional rating, recommendation, is_meta.
std::vector<LabeledReview> load_reviews_jsonl(const std::filesystem::path& path);

/// JSON object keyed by review_id.
std::map<std::string, Judgments> load_judgments(const std::filesystem::path& path);

/// CSV with header "paper_id,group"; maps paper_id -> group label.
std::map<std::string, std::string> load_groups_csv(
    const std::filesystem::path& path);

struct SimilarityEntry {
  std::string candidate_review_id;
  std::string reference_review_id;
  double score = 0.0;  // in [-1, 1]
};

/// CSV with header "candidate_review_id,reference_review_id,score".
std::vector<SimilarityEntry> load_similarity_csv(
    const std::filesystem::path& path);

/// One keyword or stopword per line; blank lines ignored.
std::vector<std::string> load_word_list(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// JSON conversions (object key order is alphabetical, so dumps are
// deterministic).
// ---------------------------------------------------------------------------

json review_to_json(const LabeledReview& review);
LabeledReview review_from_json(const json& j, const std::string& file,
                               int line);

json spans_to_json(const LabeledReview& review,
                   const std::vector<AspectSpan>& spans);

json extraction_to_json(const ExtractionResult& result,
                        const ParsedPaper& paper);

json trace_to_json(const std::string& review_id, const RefineTrace& trace);

json metric_report_to_json(const MetricReport& report);

json bias_report_to_json(const BiasReport& report);
BiasReport bias_report_from_json(const json& j);

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

/// Writes via a temp file in the target directory plus rename, so a failed
/// run never leaves a partial output behind.
void write_text_atomic(const std::filesystem::path& path,
                       std::string_view content);

/// write_text_atomic of dump(2) plus a trailing newline.
void write_json_atomic(const std::filesystem::path& path, const json& value);

/// Formats a double with enough digits to round-trip (shortest form).
std::string format_double(double value);

}  // namespace revtk

#endif  // REVTK_IO_HPP
