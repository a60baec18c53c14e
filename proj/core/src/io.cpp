#include "revtk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace revtk {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const json& require_field(const json& j, const char* field,
                          const std::string& file, int line) {
  auto it = j.find(field);
  if (it == j.end())
    throw ParseError(file, line, std::string("missing field \"") + field + '"');
  return *it;
}

std::string require_string(const json& j, const char* field,
                           const std::string& file, int line) {
  const json& value = require_field(j, field, file, line);
  if (!value.is_string())
    throw ParseError(file, line, std::string("field \"") + field +
                                     "\" must be a string");
  return value.get<std::string>();
}

json parse_json(const std::string& text, const std::string& file, int line) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(file, line, "invalid JSON");
  return j;
}

bool is_judgment_score(double v) { return v == 0.0 || v == 0.5 || v == 1.0; }

}  // namespace

ParsedPaper load_paper(const fs::path& path) {
  const std::string file = path.string();
  const json j = parse_json(read_file(path), file, 0);
  if (!j.is_object()) throw ParseError(file, 0, "paper must be a JSON object");

  ParsedPaper paper;
  paper.id = require_string(j, "id", file, 0);
  if (paper.id.empty()) throw ParseError(file, 0, "paper id must be nonempty");
  paper.title = require_string(j, "title", file, 0);
  paper.abstract_sentences =
      sentence_split(require_string(j, "abstract", file, 0));

  const json& sections = require_field(j, "sections", file, 0);
  if (!sections.is_array())
    throw ParseError(file, 0, "\"sections\" must be an array");
  for (const json& section : sections) {
    if (!section.is_object())
      throw ParseError(file, 0, "each section must be an object");
    paper.sections.push_back(
        {require_string(section, "heading", file, 0),
         sentence_split(require_string(section, "text", file, 0))});
  }

  const std::string decision = require_string(j, "decision", file, 0);
  if (decision == "accept")
    paper.decision = Decision::Accept;
  else if (decision == "reject")
    paper.decision = Decision::Reject;
  else
    throw ParseError(file, 0, "decision must be \"accept\" or \"reject\"");

  if (auto it = j.find("groups"); it != j.end()) {
    if (!it->is_object())
      throw ParseError(file, 0, "\"groups\" must be an object");
    for (const auto& [criterion, label] : it->items()) {
      if (!label.is_string())
        throw ParseError(file, 0, "group labels must be strings");
      paper.groups[criterion] = label.get<std::string>();
    }
  }
  return paper;
}

std::vector<ParsedPaper> load_papers_dir(const fs::path& dir) {
  if (!fs::is_directory(dir))
    throw ParseError(dir.string(), 0, "not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<ParsedPaper> papers;
  papers.reserve(files.size());
  for (const auto& file : files) papers.push_back(load_paper(file));
  return papers;
}

LabeledReview review_from_json(const json& j, const std::string& file,
                               int line) {
  if (!j.is_object()) throw ParseError(file, line, "review must be an object");
  LabeledReview review;
  review.review_id = require_string(j, "review_id", file, line);
  if (review.review_id.empty())
    throw ParseError(file, line, "review_id must be nonempty");
  review.paper_id = require_string(j, "paper_id", file, line);

  const json& tokens = require_field(j, "tokens", file, line);
  const json& labels = require_field(j, "labels", file, line);
  if (!tokens.is_array() || !labels.is_array())
    throw ParseError(file, line, "\"tokens\" and \"labels\" must be arrays");
  for (const json& token : tokens) {
    if (!token.is_string())
      throw ParseError(file, line, "tokens must be strings");
    review.tokens.push_back(token.get<std::string>());
  }
  for (const json& label : labels) {
    if (!label.is_string())
      throw ParseError(file, line, "labels must be strings");
    try {
      review.labels.push_back(TokenLabel::from_code(label.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(file, line, e.what());
    }
  }

  if (auto it = j.find("rating"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer())
      throw ParseError(file, line, "rating must be an integer");
    review.rating = it->get<int>();
  }
  if (auto it = j.find("recommendation"); it != j.end() && !it->is_null()) {
    if (it->is_number_integer()) {
      review.recommendation = it->get<int>();
    } else if (it->is_string()) {
      const std::string name = it->get<std::string>();
      if (name == "accept") review.recommendation = 1;
      else if (name == "neutral") review.recommendation = 0;
      else if (name == "reject") review.recommendation = -1;
      else throw ParseError(file, line, "unknown recommendation \"" + name + '"');
    } else {
      throw ParseError(file, line,
                       "recommendation must be an integer or a string");
    }
  }
  if (auto it = j.find("is_meta"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean())
      throw ParseError(file, line, "is_meta must be a boolean");
    review.is_meta = it->get<bool>();
  }

  try {
    review.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(file, line, e.what());
  }
  return review;
}

std::vector<LabeledReview> load_reviews_jsonl(const fs::path& path) {
  const std::string file = path.string();
  std::ifstream in(path);
  if (!in) throw ParseError(file, 0, "cannot open file");
  std::vector<LabeledReview> reviews;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    reviews.push_back(review_from_json(parse_json(text, file, line), file, line));
  }
  return reviews;
}

std::map<std::string, Judgments> load_judgments(const fs::path& path) {
  const std::string file = path.string();
  const json j = parse_json(read_file(path), file, 0);
  if (!j.is_object())
    throw ParseError(file, 0, "judgments must be an object keyed by review_id");

  std::map<std::string, Judgments> judgments;
  for (const auto& [review_id, entry] : j.items()) {
    if (!entry.is_object())
      throw ParseError(file, 0, "judgment entries must be objects");
    Judgments parsed;
    parsed.review_id = review_id;
    if (auto it = entry.find("summary_score"); it != entry.end() && !it->is_null()) {
      if (!it->is_number() || !is_judgment_score(it->get<double>()))
        throw ParseError(file, 0, "summary_score must be 0, 0.5 or 1 (review " +
                                      review_id + ")");
      parsed.summary_score = it->get<double>();
    }
    if (auto it = entry.find("negative_aspects"); it != entry.end()) {
      if (!it->is_array())
        throw ParseError(file, 0, "negative_aspects must be an array");
      for (const json& item : *it) {
        NegativeSpanJudgment nj;
        const std::string name = require_string(item, "aspect", file, 0);
        const auto aspect = aspect_from_name(name);
        if (!aspect || *aspect == Aspect::Summary)
          throw ParseError(file, 0, "invalid negative aspect \"" + name + '"');
        nj.aspect = *aspect;
        const json& start = require_field(item, "start", file, 0);
        const json& end = require_field(item, "end", file, 0);
        if (!start.is_number_unsigned() || !end.is_number_unsigned())
          throw ParseError(file, 0, "span bounds must be non-negative integers");
        nj.start = start.get<std::size_t>();
        nj.end = end.get<std::size_t>();
        if (nj.start >= nj.end)
          throw ParseError(file, 0, "span start must be below span end");
        const json& has = require_field(item, "has_evidence", file, 0);
        if (!has.is_boolean())
          throw ParseError(file, 0, "has_evidence must be a boolean");
        nj.has_evidence = has.get<bool>();
        if (auto vit = item.find("validity"); vit != item.end() && !vit->is_null()) {
          if (!nj.has_evidence)
            throw ParseError(file, 0,
                             "validity is only legal with has_evidence (review " +
                                 review_id + ")");
          if (!vit->is_number() || !is_judgment_score(vit->get<double>()))
            throw ParseError(file, 0, "validity must be 0, 0.5 or 1");
          nj.validity = vit->get<double>();
        }
        parsed.negative_aspects.push_back(nj);
      }
    }
    judgments.emplace(review_id, std::move(parsed));
  }
  return judgments;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

std::map<std::string, std::string> load_groups_csv(const fs::path& path) {
  const std::string file = path.string();
  std::ifstream in(path);
  if (!in) throw ParseError(file, 0, "cannot open file");
  std::string line_text;
  int line = 0;
  std::map<std::string, std::string> groups;
  while (std::getline(in, line_text)) {
    ++line;
    if (line_text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line_text);
    if (line == 1) {
      if (fields != std::vector<std::string>{"paper_id", "group"})
        throw ParseError(file, line, "expected header \"paper_id,group\"");
      continue;
    }
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw ParseError(file, line, "expected \"paper_id,group\" row");
    if (!groups.emplace(fields[0], fields[1]).second)
      throw ParseError(file, line, "duplicate paper_id " + fields[0]);
  }
  return groups;
}

std::vector<SimilarityEntry> load_similarity_csv(const fs::path& path) {
  const std::string file = path.string();
  std::ifstream in(path);
  if (!in) throw ParseError(file, 0, "cannot open file");
  std::string line_text;
  int line = 0;
  std::vector<SimilarityEntry> entries;
  while (std::getline(in, line_text)) {
    ++line;
    if (line_text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line_text);
    if (line == 1) {
      if (fields != std::vector<std::string>{"candidate_review_id",
                                             "reference_review_id", "score"})
        throw ParseError(
            file, line,
            "expected header \"candidate_review_id,reference_review_id,score\"");
      continue;
    }
    if (fields.size() != 3)
      throw ParseError(file, line, "expected three fields");
    SimilarityEntry entry;
    entry.candidate_review_id = fields[0];
    entry.reference_review_id = fields[1];
    const char* begin = fields[2].data();
    const char* end = begin + fields[2].size();
    auto [ptr, ec] = std::from_chars(begin, end, entry.score);
    if (ec != std::errc() || ptr != end)
      throw ParseError(file, line, "score is not a number");
    if (entry.score < -1.0 || entry.score > 1.0)
      throw ParseError(file, line, "score outside [-1, 1]");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<std::string> load_word_list(const fs::path& path) {
  const std::string file = path.string();
  std::ifstream in(path);
  if (!in) throw ParseError(file, 0, "cannot open file");
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) words.push_back(line);
  }
  return words;
}

json review_to_json(const LabeledReview& review) {
  json j;
  j["review_id"] = review.review_id;
  j["paper_id"] = review.paper_id;
  j["tokens"] = review.tokens;
  json labels = json::array();
  for (const auto& label : review.labels) labels.push_back(label.code());
  j["labels"] = std::move(labels);
  if (review.rating) j["rating"] = *review.rating;
  if (review.recommendation) j["recommendation"] = *review.recommendation;
  j["is_meta"] = review.is_meta;
  return j;
}

json spans_to_json(const LabeledReview& review,
                   const std::vector<AspectSpan>& spans) {
  json j;
  j["review_id"] = review.review_id;
  j["paper_id"] = review.paper_id;
  json items = json::array();
  for (const auto& span : spans) {
    std::string text;
    for (std::size_t i = span.start; i < span.end; ++i) {
      if (!text.empty()) text.push_back(' ');
      text += review.tokens[i];
    }
    items.push_back({{"label", span.label().code()},
                     {"start", span.start},
                     {"end", span.end},
                     {"text", std::move(text)}});
  }
  j["spans"] = std::move(items);
  return j;
}

json extraction_to_json(const ExtractionResult& result,
                        const ParsedPaper& paper) {
  json j;
  j["paper_id"] = result.paper_id;
  j["method"] = std::string(extraction_method_name(result.method));
  j["sentence_indices"] = result.sentence_indices;
  if (result.objective) j["objective"] = *result.objective;
  if (result.seed) j["seed"] = *result.seed;
  json sentences = json::array();
  for (std::size_t index : result.sentence_indices)
    sentences.push_back(paper.sentence(index));
  j["sentences"] = std::move(sentences);
  return j;
}

json trace_to_json(const std::string& review_id, const RefineTrace& trace) {
  json edits = json::array();
  for (const auto& edit : trace.edits) {
    edits.push_back({{"rule", edit.rule},
                     {"begin", edit.begin},
                     {"end", edit.end},
                     {"from", edit.from.code()},
                     {"to", edit.to.code()}});
  }
  return json{{"review_id", review_id}, {"edits", std::move(edits)}};
}

namespace {

json table_to_json(const MetricTable& table) {
  json j = json::object();
  table.for_each([&](const char* name, const MetricStat& stat) {
    if (stat.count == 0) return;
    j[name] = {{"mean", *stat.mean()}, {"count", stat.count}};
  });
  return j;
}

}  // namespace

json metric_report_to_json(const MetricReport& report) {
  json papers = json::object();
  for (const auto& [paper_id, table] : report.per_paper)
    papers[paper_id] = table_to_json(table);
  return json{{"corpus", table_to_json(report.corpus)},
              {"papers", std::move(papers)}};
}

json bias_report_to_json(const BiasReport& report) {
  json aspects = json::array();
  for (const auto& bias : report.aspects) {
    aspects.push_back({{"aspect", std::string(aspect_short_name(bias.aspect))},
                       {"ref_g0", bias.ref_g0},
                       {"ref_g1", bias.ref_g1},
                       {"gen_g0", bias.gen_g0},
                       {"gen_g1", bias.gen_g1},
                       {"ref_disparity", bias.ref_disparity},
                       {"gen_disparity", bias.gen_disparity},
                       {"disparity_difference", bias.disparity_difference}});
  }
  return json{{"criterion", report.criterion},
              {"review_counts",
               {{"ref_g0", report.ref_g0_reviews},
                {"ref_g1", report.ref_g1_reviews},
                {"gen_g0", report.gen_g0_reviews},
                {"gen_g1", report.gen_g1_reviews}}},
              {"aspects", std::move(aspects)},
              {"total", report.total}};
}

BiasReport bias_report_from_json(const json& j) {
  BiasReport report;
  report.criterion = j.at("criterion").get<std::string>();
  const json& counts = j.at("review_counts");
  report.ref_g0_reviews = counts.at("ref_g0").get<std::size_t>();
  report.ref_g1_reviews = counts.at("ref_g1").get<std::size_t>();
  report.gen_g0_reviews = counts.at("gen_g0").get<std::size_t>();
  report.gen_g1_reviews = counts.at("gen_g1").get<std::size_t>();
  const json& aspects = j.at("aspects");
  for (std::size_t a = 0; a < report.aspects.size(); ++a) {
    const json& item = aspects.at(a);
    AspectBias& bias = report.aspects[a];
    bias.aspect = kPolarAspects[a];
    bias.ref_g0 = item.at("ref_g0").get<double>();
    bias.ref_g1 = item.at("ref_g1").get<double>();
    bias.gen_g0 = item.at("gen_g0").get<double>();
    bias.gen_g1 = item.at("gen_g1").get<double>();
    bias.ref_disparity = item.at("ref_disparity").get<double>();
    bias.gen_disparity = item.at("gen_disparity").get<double>();
    bias.disparity_difference = item.at("disparity_difference").get<double>();
  }
  report.total = j.at("total").get<double>();
  return report;
}

void write_text_atomic(const fs::path& path, std::string_view content) {
  const fs::path dir = path.parent_path();
  if (!dir.empty()) fs::create_directories(dir);
  const fs::path temp = path.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      fs::remove(temp);
      throw std::runtime_error("failed writing " + temp.string());
    }
  }
  fs::rename(temp, path);
}

void write_json_atomic(const fs::path& path, const json& value) {
  write_text_atomic(path, value.dump(2) + "\n");
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return "0";
  return std::string(buffer, ptr);
}

}  // namespace revtk
