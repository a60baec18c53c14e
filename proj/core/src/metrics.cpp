#include "revtk/metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace revtk {

double racc(int decision, int recommendation) {
  if (decision != 1 && decision != -1)
    throw std::invalid_argument("racc: decision must be +1 or -1");
  if (recommendation < -1 || recommendation > 1)
    throw std::invalid_argument("racc: recommendation must be -1, 0 or +1");
  return static_cast<double>(decision * recommendation);
}

void RatingScale::validate() const {
  if (!(min <= neutral_min && neutral_min <= neutral_max && neutral_max <= max))
    throw std::invalid_argument(
        "rating scale: need min <= neutral_min <= neutral_max <= max");
}

int rating_to_rec(int rating, const RatingScale& scale) {
  scale.validate();
  if (rating < scale.min || rating > scale.max) {
    throw std::out_of_range("rating " + std::to_string(rating) +
                            " outside the configured scale [" +
                            std::to_string(scale.min) + ", " +
                            std::to_string(scale.max) + "]");
  }
  if (rating < scale.neutral_min) return -1;
  if (rating <= scale.neutral_max) return 0;
  return 1;
}

double acov(std::span<const AspectSpan> spans) {
  std::set<Aspect> present;
  for (const auto& span : spans) present.insert(span.aspect);
  return static_cast<double>(present.size()) /
         static_cast<double>(kAspectCount);
}

double arec(std::span<const AspectSpan> review_spans,
            std::span<const AspectSpan> meta_spans) {
  std::set<std::pair<Aspect, Polarity>> meta_pairs;
  for (const auto& span : meta_spans) {
    if (span.aspect != Aspect::Summary)
      meta_pairs.insert({span.aspect, span.polarity});
  }
  if (meta_pairs.empty()) return 1.0;  // nothing asked for, nothing missed
  std::set<std::pair<Aspect, Polarity>> review_pairs;
  for (const auto& span : review_spans)
    review_pairs.insert({span.aspect, span.polarity});
  std::size_t covered = 0;
  for (const auto& pair : meta_pairs) covered += review_pairs.count(pair);
  return static_cast<double>(covered) / static_cast<double>(meta_pairs.size());
}

namespace {

const NegativeSpanJudgment* find_judgment(const Judgments& judgments,
                                          const AspectSpan& span) {
  for (const auto& entry : judgments.negative_aspects) {
    if (entry.aspect == span.aspect && entry.start == span.start &&
        entry.end == span.end)
      return &entry;
  }
  return nullptr;
}

}  // namespace

double informativeness(std::span<const AspectSpan> spans,
                       const Judgments& judgments) {
  long negatives = 0, evidenced = 0;
  for (const auto& span : spans) {
    if (span.polarity != Polarity::Negative) continue;
    ++negatives;
    const auto* entry = find_judgment(judgments, span);
    if (entry == nullptr) {
      throw std::invalid_argument(
          "informativeness: review " + judgments.review_id +
          " has no judgment for the negative " +
          std::string(aspect_name(span.aspect)) + " span [" +
          std::to_string(span.start) + ", " + std::to_string(span.end) + ")");
    }
    if (entry->has_evidence) ++evidenced;
  }
  if (negatives == 0) return 1.0;
  return static_cast<double>(evidenced) / static_cast<double>(negatives);
}

double acon(const Judgments& judgments) {
  double sum = 0.0;
  long evidenced = 0;
  for (const auto& entry : judgments.negative_aspects) {
    if (!entry.has_evidence) continue;
    if (!entry.validity) {
      throw std::invalid_argument("acon: review " + judgments.review_id +
                                  " has an evidenced span without a validity "
                                  "score");
    }
    sum += *entry.validity;
    ++evidenced;
  }
  if (evidenced == 0) return 1.0;
  return sum / static_cast<double>(evidenced);
}

double sacc(const Judgments& judgments) {
  if (!judgments.summary_score) {
    throw std::invalid_argument("sacc: review " + judgments.review_id +
                                " has no summary judgment");
  }
  return *judgments.summary_score;
}

void ReviewMetricValues::validate() const {
  auto in = [](std::optional<double> v, double lo, double hi) {
    return !v || (*v >= lo && *v <= hi);
  };
  if (!in(racc, -1, 1)) throw std::invalid_argument("racc outside [-1,1]");
  if (acov < 0 || acov > 1) throw std::invalid_argument("acov outside [0,1]");
  if (!in(arec, 0, 1)) throw std::invalid_argument("arec outside [0,1]");
  if (!in(info, 0, 1)) throw std::invalid_argument("info outside [0,1]");
  if (!in(acon, 0, 1)) throw std::invalid_argument("acon outside [0,1]");
  if (!in(sacc, 0, 1)) throw std::invalid_argument("sacc outside [0,1]");
  if (!in(rouge1, 0, 1)) throw std::invalid_argument("rouge1 outside [0,1]");
  if (!in(rouge2, 0, 1)) throw std::invalid_argument("rouge2 outside [0,1]");
  if (!in(rougeL, 0, 1)) throw std::invalid_argument("rougeL outside [0,1]");
  if (!in(similarity, -1, 1))
    throw std::invalid_argument("similarity outside [-1,1]");
}

// Similarity-style metrics are max-aggregated per review upstream and
// average straight over reviews; everything else averages per paper first.
namespace {
enum class Level { PerPaper, PerReview };
}  // namespace

MetricReport aggregate(
    const std::vector<std::pair<std::string, ReviewMetricValues>>& per_review) {
  MetricReport report;

  // Every paper appears in the report even if all its values are absent.
  for (const auto& [paper_id, values] : per_review) {
    values.validate();
    report.per_paper[paper_id];
  }

  auto run_opt = [&](std::optional<double> ReviewMetricValues::* value_member,
                     MetricStat MetricTable::* stat_member, Level level) {
    std::map<std::string, MetricStat> by_paper;
    for (const auto& [paper_id, values] : per_review) {
      const auto& value = values.*value_member;
      if (!value) continue;
      by_paper[paper_id].add(*value);
      if (level == Level::PerReview) (report.corpus.*stat_member).add(*value);
    }
    for (const auto& [paper_id, stat] : by_paper) {
      report.per_paper[paper_id].*stat_member = stat;
      if (level == Level::PerPaper)
        (report.corpus.*stat_member).add(*stat.mean());
    }
  };

  run_opt(&ReviewMetricValues::racc, &MetricTable::racc, Level::PerPaper);
  run_opt(&ReviewMetricValues::arec, &MetricTable::arec, Level::PerPaper);
  run_opt(&ReviewMetricValues::info, &MetricTable::info, Level::PerPaper);
  run_opt(&ReviewMetricValues::acon, &MetricTable::acon, Level::PerPaper);
  run_opt(&ReviewMetricValues::sacc, &MetricTable::sacc, Level::PerPaper);
  run_opt(&ReviewMetricValues::rouge1, &MetricTable::rouge1, Level::PerReview);
  run_opt(&ReviewMetricValues::rouge2, &MetricTable::rouge2, Level::PerReview);
  run_opt(&ReviewMetricValues::rougeL, &MetricTable::rougeL, Level::PerReview);
  run_opt(&ReviewMetricValues::similarity, &MetricTable::similarity,
          Level::PerReview);

  // acov is always present (plain double).
  {
    std::map<std::string, MetricStat> by_paper;
    for (const auto& [paper_id, values] : per_review)
      by_paper[paper_id].add(values.acov);
    for (const auto& [paper_id, stat] : by_paper) {
      report.per_paper[paper_id].acov = stat;
      report.corpus.acov.add(*stat.mean());
    }
  }
  return report;
}

}  // namespace revtk
