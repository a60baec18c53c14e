#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "revtk/annoqa.hpp"
#include "revtk/bias.hpp"
#include "revtk/extraction.hpp"
#include "revtk/io.hpp"
#include "revtk/metrics.hpp"
#include "revtk/refine.hpp"
#include "revtk/rouge.hpp"

namespace revtk::cli {

namespace fs = std::filesystem;

namespace {

// Index-sharded worker pool; results keyed by index stay deterministic no
// matter how the threads interleave.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (error) std::rethrow_exception(error);
}

std::string jsonl_dump(const std::vector<json>& lines) {
  std::string text;
  for (const auto& line : lines) {
    text += line.dump();
    text += '\n';
  }
  return text;
}

std::vector<std::string> review_rouge_tokens(const LabeledReview& review) {
  return rouge_tokens(join_tokens(review.tokens));
}

}  // namespace

void run_extract(const ToolConfig& config, const ExtractArgs& args) {
  const ParsedPaper paper = load_paper(args.paper);
  const auto keywords = config.keywords();

  CEConfig ce = config.ce;
  if (args.seed) ce.seed = *args.seed;
  if (args.max_sentences) ce.max_sentences = *args.max_sentences;
  ce.sample_final = args.sample_final;

  const auto method = extraction_method_from_name(args.method);
  if (!method)
    throw std::invalid_argument("unknown extraction method: " + args.method);

  json extractions = json::array();
  switch (*method) {
    case ExtractionMethod::Intro:
      extractions.push_back(extraction_to_json(intro_extract(paper), paper));
      break;
    case ExtractionMethod::CrossEntropy:
      extractions.push_back(
          extraction_to_json(ce_extract(paper, ce, keywords), paper));
      break;
    case ExtractionMethod::Hybrid:
      extractions.push_back(
          extraction_to_json(hybrid_extract(paper, ce, keywords), paper));
      break;
    case ExtractionMethod::Oracle: {
      if (!args.refs)
        throw std::invalid_argument(
            "oracle extraction needs --refs with the paper's reviews");
      const auto reviews = load_reviews_jsonl(*args.refs);
      // One oracle per reference review of this paper.
      const int budget = args.budget.value_or(ce.max_sentences);
      bool any = false;
      for (const auto& review : reviews) {
        if (review.paper_id != paper.id || review.is_meta) continue;
        any = true;
        auto result = oracle_extract(paper, review.tokens, budget);
        json j = extraction_to_json(result, paper);
        j["reference_review_id"] = review.review_id;
        extractions.push_back(std::move(j));
      }
      if (!any)
        throw std::invalid_argument("no reference reviews for paper " +
                                    paper.id + " in " + args.refs->string());
      break;
    }
  }

  const json out = {{"paper_id", paper.id},
                    {"method", args.method},
                    {"extractions", std::move(extractions)}};
  write_json_atomic(config.resolve_output(args.out), out);
}

void run_evaluate(const ToolConfig& config, const EvaluateArgs& args) {
  const auto papers = load_papers_dir(args.papers_dir);
  std::map<std::string, const ParsedPaper*> papers_by_id;
  for (const auto& paper : papers) papers_by_id[paper.id] = &paper;

  const auto reviews = load_reviews_jsonl(args.reviews);

  // First meta review per paper, in file order.
  std::map<std::string, std::vector<AspectSpan>> meta_spans;
  if (args.meta) {
    for (const auto& meta : load_reviews_jsonl(*args.meta)) {
      if (!meta_spans.count(meta.paper_id))
        meta_spans[meta.paper_id] = labels_to_spans(meta);
    }
  }

  // Reference reviews per paper, for native ROUGE scoring.
  std::map<std::string, std::vector<LabeledReview>> refs_by_paper;
  if (args.refs) {
    for (auto& ref : load_reviews_jsonl(*args.refs))
      refs_by_paper[ref.paper_id].push_back(std::move(ref));
  }

  std::map<std::string, Judgments> judgments;
  if (args.judgments) judgments = load_judgments(*args.judgments);

  // Externally computed similarity, max-aggregated per candidate review.
  std::map<std::string, double> similarity;
  if (args.similarity) {
    for (const auto& entry : load_similarity_csv(*args.similarity)) {
      auto [it, inserted] =
          similarity.emplace(entry.candidate_review_id, entry.score);
      if (!inserted) it->second = std::max(it->second, entry.score);
    }
  }

  std::vector<ReviewMetricValues> values(reviews.size());
  parallel_for(reviews.size(), config.parallelism, [&](std::size_t i) {
    const LabeledReview& review = reviews[i];
    const auto paper_it = papers_by_id.find(review.paper_id);
    if (paper_it == papers_by_id.end())
      throw std::invalid_argument("review " + review.review_id +
                                  " references unknown paper " +
                                  review.paper_id);
    const ParsedPaper& paper = *paper_it->second;
    const auto spans = labels_to_spans(review);
    ReviewMetricValues& v = values[i];

    v.acov = acov(spans);

    std::optional<int> recommendation = review.recommendation;
    if (!recommendation && review.rating)
      recommendation = rating_to_rec(*review.rating, config.rating_scale);
    if (recommendation)
      v.racc = racc(decision_value(paper.decision), *recommendation);

    if (auto it = meta_spans.find(review.paper_id); it != meta_spans.end())
      v.arec = arec(spans, it->second);

    long negative_spans = 0;
    for (const auto& span : spans)
      negative_spans += span.polarity == Polarity::Negative;
    if (auto it = judgments.find(review.review_id); it != judgments.end()) {
      v.info = informativeness(spans, it->second);
      v.acon = acon(it->second);
      if (it->second.summary_score) v.sacc = sacc(it->second);
    } else if (negative_spans == 0) {
      // data-independent cases: nothing negative to back with evidence
      v.info = 1.0;
      v.acon = 1.0;
    }

    if (auto it = refs_by_paper.find(review.paper_id);
        it != refs_by_paper.end()) {
      const auto candidate = review_rouge_tokens(review);
      std::vector<std::vector<std::string>> references;
      for (const auto& ref : it->second) {
        if (ref.review_id == review.review_id) continue;  // never self-match
        references.push_back(review_rouge_tokens(ref));
      }
      if (!references.empty()) {
        v.rouge1 = max_aggregate(candidate, references, RougeMetric::Rouge1).f1;
        v.rouge2 = max_aggregate(candidate, references, RougeMetric::Rouge2).f1;
        v.rougeL = max_aggregate(candidate, references, RougeMetric::RougeL).f1;
      }
    }

    if (auto it = similarity.find(review.review_id); it != similarity.end())
      v.similarity = it->second;
  });

  std::vector<std::pair<std::string, ReviewMetricValues>> per_review;
  per_review.reserve(reviews.size());
  for (std::size_t i = 0; i < reviews.size(); ++i)
    per_review.emplace_back(reviews[i].paper_id, values[i]);
  const MetricReport report = aggregate(per_review);

  json out = metric_report_to_json(report);
  json review_values = json::object();
  for (std::size_t i = 0; i < reviews.size(); ++i) {
    json entry = json::object();
    const ReviewMetricValues& v = values[i];
    entry["acov"] = v.acov;
    auto put = [&entry](const char* name, const std::optional<double>& value) {
      if (value) entry[name] = *value;
    };
    put("racc", v.racc);
    put("arec", v.arec);
    put("info", v.info);
    put("acon", v.acon);
    put("sacc", v.sacc);
    put("rouge1", v.rouge1);
    put("rouge2", v.rouge2);
    put("rougeL", v.rougeL);
    put("similarity", v.similarity);
    entry["paper_id"] = reviews[i].paper_id;
    review_values[reviews[i].review_id] = std::move(entry);
  }
  out["reviews"] = std::move(review_values);
  write_json_atomic(config.resolve_output(args.out), out);
}

void run_refine(const ToolConfig& config, const RefineArgs& args) {
  const auto reviews = load_reviews_jsonl(args.in);
  std::vector<LabeledReview> refined(reviews.size());
  std::vector<RefineTrace> traces(reviews.size());
  parallel_for(reviews.size(), config.parallelism, [&](std::size_t i) {
    auto [review, trace] = refine(reviews[i]);
    refined[i] = std::move(review);
    traces[i] = std::move(trace);
  });

  std::vector<json> lines;
  lines.reserve(refined.size());
  for (const auto& review : refined) lines.push_back(review_to_json(review));
  write_text_atomic(config.resolve_output(args.out), jsonl_dump(lines));

  if (args.trace) {
    std::vector<json> trace_lines;
    trace_lines.reserve(traces.size());
    for (std::size_t i = 0; i < traces.size(); ++i)
      trace_lines.push_back(trace_to_json(reviews[i].review_id, traces[i]));
    write_text_atomic(config.resolve_output(*args.trace),
                      jsonl_dump(trace_lines));
  }
}

void run_spans(const ToolConfig& config, const SpansArgs& args) {
  const auto reviews = load_reviews_jsonl(args.in);
  std::vector<json> lines;
  lines.reserve(reviews.size());
  for (const auto& review : reviews)
    lines.push_back(spans_to_json(review, labels_to_spans(review)));
  write_text_atomic(config.resolve_output(args.out), jsonl_dump(lines));
}

namespace {

struct GroupedReviews {
  // spans per review, grouped as [g0, g1], keyed by paper for --per-paper
  std::array<std::vector<SpanSet>, 2> by_review;
  std::array<std::map<std::string, std::vector<SpanSet>>, 2> by_paper;
  std::size_t skipped = 0;  // reviews whose paper has no group row
};

GroupedReviews partition_reviews(const std::vector<LabeledReview>& reviews,
                                 const std::map<std::string, std::string>& groups,
                                 const std::string& g0_label,
                                 const std::string& g1_label,
                                 const fs::path& groups_file) {
  GroupedReviews grouped;
  for (const auto& review : reviews) {
    const auto it = groups.find(review.paper_id);
    if (it == groups.end()) {
      ++grouped.skipped;
      continue;
    }
    int g;
    if (it->second == g0_label) {
      g = 0;
    } else if (it->second == g1_label) {
      g = 1;
    } else {
      throw ParseError(groups_file.string(), 0,
                       "group label \"" + it->second + "\" for paper " +
                           review.paper_id + " matches neither \"" + g0_label +
                           "\" nor \"" + g1_label + '"');
    }
    auto spans = labels_to_spans(review);
    grouped.by_paper[g][review.paper_id].push_back(spans);
    grouped.by_review[g].push_back(std::move(spans));
  }
  return grouped;
}

std::vector<std::vector<SpanSet>> paper_groups(
    const std::map<std::string, std::vector<SpanSet>>& by_paper) {
  std::vector<std::vector<SpanSet>> papers;
  papers.reserve(by_paper.size());
  for (const auto& [paper_id, reviews] : by_paper) papers.push_back(reviews);
  return papers;
}

}  // namespace

void run_bias(const ToolConfig& config, const BiasArgs& args) {
  const auto groups = load_groups_csv(args.groups);
  const auto ref = partition_reviews(load_reviews_jsonl(args.reviews_ref),
                                     groups, args.g0_label, args.g1_label,
                                     args.groups);
  const auto gen = partition_reviews(load_reviews_jsonl(args.reviews_gen),
                                     groups, args.g0_label, args.g1_label,
                                     args.groups);

  BiasReport report;
  if (args.per_paper) {
    report.criterion = args.criterion;
    report.ref_g0_reviews = ref.by_review[0].size();
    report.ref_g1_reviews = ref.by_review[1].size();
    report.gen_g0_reviews = gen.by_review[0].size();
    report.gen_g1_reviews = gen.by_review[1].size();
    const auto ref_g0 = paper_groups(ref.by_paper[0]);
    const auto ref_g1 = paper_groups(ref.by_paper[1]);
    const auto gen_g0 = paper_groups(gen.by_paper[0]);
    const auto gen_g1 = paper_groups(gen.by_paper[1]);
    for (std::size_t a = 0; a < kPolarAspects.size(); ++a) {
      AspectBias& bias = report.aspects[a];
      bias.aspect = kPolarAspects[a];
      bias.ref_g0 = group_aspect_score_by_paper(ref_g0, bias.aspect);
      bias.ref_g1 = group_aspect_score_by_paper(ref_g1, bias.aspect);
      bias.gen_g0 = group_aspect_score_by_paper(gen_g0, bias.aspect);
      bias.gen_g1 = group_aspect_score_by_paper(gen_g1, bias.aspect);
      bias.ref_disparity = bias.ref_g0 - bias.ref_g1;
      bias.gen_disparity = bias.gen_g0 - bias.gen_g1;
      bias.disparity_difference =
          disparity_difference(bias.gen_disparity, bias.ref_disparity);
      report.total += std::abs(bias.disparity_difference);
    }
  } else {
    report = bias_report(args.criterion, ref.by_review[0], ref.by_review[1],
                         gen.by_review[0], gen.by_review[1]);
  }

  json out = bias_report_to_json(report);
  out["skipped_reviews"] = {{"reference", ref.skipped},
                            {"generated", gen.skipped}};
  write_json_atomic(config.resolve_output(args.out), out);
  if (args.csv)
    write_text_atomic(config.resolve_output(*args.csv), spider_csv(report));
  if (args.svg)
    write_text_atomic(config.resolve_output(*args.svg), spider_svg(report));

  // Summary table in percentage points; the JSON keeps raw fractions.
  std::printf("criterion: %s (disparity differences in percentage points)\n",
              report.criterion.c_str());
  for (const auto& aspect : report.aspects)
    std::printf("  %s %+7.2f\n",
                std::string(aspect_short_name(aspect.aspect)).c_str(),
                100.0 * aspect.disparity_difference);
  std::printf("  total %6.2f\n", 100.0 * report.total);
}

namespace {

// {"review_id": ..., "spans": [{"label": "-clarity", "start": 0, "end": 3}]}
std::map<std::string, std::vector<AspectSpan>> load_span_file(
    const fs::path& path) {
  const std::string file = path.string();
  std::ifstream in(path);
  if (!in) throw ParseError(file, 0, "cannot open file");
  std::map<std::string, std::vector<AspectSpan>> spans;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw ParseError(file, line, "invalid JSON object");
    if (!j.contains("review_id") || !j["review_id"].is_string())
      throw ParseError(file, line, "missing review_id");
    const std::string review_id = j["review_id"].get<std::string>();
    if (spans.count(review_id))
      throw ParseError(file, line, "duplicate review_id " + review_id);
    auto& list = spans[review_id];
    if (!j.contains("spans") || !j["spans"].is_array())
      throw ParseError(file, line, "missing spans array");
    for (const json& item : j["spans"]) {
      if (!item.contains("label") || !item["label"].is_string() ||
          !item.contains("start") || !item["start"].is_number_unsigned() ||
          !item.contains("end") || !item["end"].is_number_unsigned())
        throw ParseError(file, line, "span needs label, start and end");
      TokenLabel label;
      try {
        label = TokenLabel::from_code(item["label"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(file, line, e.what());
      }
      if (label.is_outside())
        throw ParseError(file, line, "spans cannot be labeled O");
      const auto start = item["start"].get<std::size_t>();
      const auto end = item["end"].get<std::size_t>();
      if (start >= end)
        throw ParseError(file, line, "span start must be below span end");
      list.push_back({label.aspect(), label.polarity(), start, end});
    }
  }
  return spans;
}

}  // namespace

void run_annoqa(const ToolConfig& config, const AnnoQaArgs& args) {
  const auto predictions = load_span_file(args.predictions);
  std::array<std::map<std::string, std::vector<AspectSpan>>, 3> kept;
  std::array<std::map<std::string, std::vector<AspectSpan>>, 3> added;
  for (int a = 0; a < 3; ++a) {
    kept[a] = load_span_file(args.kept[a]);
    added[a] = load_span_file(args.added[a]);
    for (const auto& [review_id, unused] : kept[a]) {
      if (!predictions.count(review_id))
        throw ParseError(args.kept[a].string(), 0,
                         "review " + review_id + " has no predictions");
    }
    for (const auto& [review_id, unused] : added[a]) {
      if (!predictions.count(review_id))
        throw ParseError(args.added[a].string(), 0,
                         "review " + review_id + " has no predictions");
    }
  }

  json reviews = json::object();
  double precision_sum = 0.0, recall_sum = 0.0;
  std::size_t micro_m = 0, micro_c = 0;
  long micro_n = 0;
  for (const auto& [review_id, pred_spans] : predictions) {
    SpanJudgmentSet sjs;
    sjs.predictions = pred_spans;
    for (int a = 0; a < 3; ++a) {
      // a review absent from an annotator file means that annotator kept
      // (or added) nothing
      if (auto it = kept[a].find(review_id); it != kept[a].end())
        sjs.kept[a] = it->second;
      if (auto it = added[a].find(review_id); it != added[a].end())
        sjs.added[a] = it->second;
    }
    SpanJudgmentCounts counts;
    try {
      counts = annoqa_counts(sjs);
    } catch (const std::invalid_argument& e) {
      throw ParseError(args.predictions.string(), 0,
                       "review " + review_id + ": " + e.what());
    }
    const double precision = aspect_precision(sjs);
    const double recall = aspect_recall(sjs);
    reviews[review_id] = {{"precision", precision},
                          {"recall", recall},
                          {"predictions", counts.predictions},
                          {"common_kept", counts.common_kept},
                          {"total_spans", counts.total}};
    precision_sum += precision;
    recall_sum += recall;
    micro_m += counts.predictions;
    micro_c += counts.common_kept;
    micro_n += counts.total;
  }

  const double count = static_cast<double>(predictions.size());
  json out = {
      {"reviews", std::move(reviews)},
      {"macro",
       {{"precision", count > 0 ? precision_sum / count : 1.0},
        {"recall", count > 0 ? recall_sum / count : 1.0}}},
      {"micro",
       {{"precision",
         micro_m > 0 ? static_cast<double>(micro_c) / micro_m : 1.0},
        {"recall",
         micro_n > 0 ? static_cast<double>(micro_m) / micro_n : 1.0}}},
  };
  write_json_atomic(config.resolve_output(args.out), out);
}

}  // namespace revtk::cli
