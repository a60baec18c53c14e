#include "revtk/bias.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace revtk {

double aspect_score(std::span<const AspectSpan> review_spans, Aspect aspect) {
  if (aspect == Aspect::Summary)
    throw std::invalid_argument("aspect_score: summary carries no polarity");
  long occurrences = 0, positive = 0;
  for (const auto& span : review_spans) {
    if (span.aspect != aspect) continue;
    ++occurrences;
    if (span.polarity == Polarity::Positive) ++positive;
  }
  if (occurrences == 0) return 0.5;  // neutral when the aspect never occurs
  return static_cast<double>(positive) / static_cast<double>(occurrences);
}

double group_aspect_score(std::span<const SpanSet> reviews, Aspect aspect) {
  if (reviews.empty())
    throw std::invalid_argument("group_aspect_score: empty review group");
  double sum = 0.0;
  for (const auto& spans : reviews) sum += aspect_score(spans, aspect);
  return sum / static_cast<double>(reviews.size());
}

double group_aspect_score_by_paper(
    std::span<const std::vector<SpanSet>> papers, Aspect aspect) {
  if (papers.empty())
    throw std::invalid_argument("group_aspect_score_by_paper: empty group");
  double sum = 0.0;
  for (const auto& reviews : papers) sum += group_aspect_score(reviews, aspect);
  return sum / static_cast<double>(papers.size());
}

double disparity(std::span<const SpanSet> group0,
                 std::span<const SpanSet> group1, Aspect aspect) {
  return group_aspect_score(group0, aspect) -
         group_aspect_score(group1, aspect);
}

double disparity_difference(double generated_disparity,
                            double reference_disparity) {
  return generated_disparity - reference_disparity;
}

BiasReport bias_report(std::string criterion, std::span<const SpanSet> ref_g0,
                       std::span<const SpanSet> ref_g1,
                       std::span<const SpanSet> gen_g0,
                       std::span<const SpanSet> gen_g1) {
  BiasReport report;
  report.criterion = std::move(criterion);
  report.ref_g0_reviews = ref_g0.size();
  report.ref_g1_reviews = ref_g1.size();
  report.gen_g0_reviews = gen_g0.size();
  report.gen_g1_reviews = gen_g1.size();
  for (std::size_t a = 0; a < kPolarAspects.size(); ++a) {
    const Aspect aspect = kPolarAspects[a];
    AspectBias& bias = report.aspects[a];
    bias.aspect = aspect;
    bias.ref_g0 = group_aspect_score(ref_g0, aspect);
    bias.ref_g1 = group_aspect_score(ref_g1, aspect);
    bias.gen_g0 = group_aspect_score(gen_g0, aspect);
    bias.gen_g1 = group_aspect_score(gen_g1, aspect);
    bias.ref_disparity = bias.ref_g0 - bias.ref_g1;
    bias.gen_disparity = bias.gen_g0 - bias.gen_g1;
    bias.disparity_difference =
        disparity_difference(bias.gen_disparity, bias.ref_disparity);
    report.total += std::abs(bias.disparity_difference);
  }
  return report;
}

namespace {

std::string format_score(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

}  // namespace

std::string spider_csv(const BiasReport& report) {
  std::string csv = "set,group,aspect,score\n";
  const struct {
    const char* set;
    const char* group;
    double AspectBias::* member;
  } rows[] = {
      {"reference", "G0", &AspectBias::ref_g0},
      {"reference", "G1", &AspectBias::ref_g1},
      {"generated", "G0", &AspectBias::gen_g0},
      {"generated", "G1", &AspectBias::gen_g1},
  };
  for (const auto& row : rows) {
    for (const auto& bias : report.aspects) {
      csv += row.set;
      csv += ',';
      csv += row.group;
      csv += ',';
      csv += aspect_short_name(bias.aspect);
      csv += ',';
      csv += format_score(bias.*row.member);
      csv += '\n';
    }
  }
  return csv;
}

std::string spider_svg(const BiasReport& report) {
  constexpr double kSize = 440.0, kRadius = 160.0;
  const double cx = kSize / 2, cy = kSize / 2;
  const std::size_t axes = report.aspects.size();

  auto point = [&](std::size_t axis, double radius) {
    const double angle =
        -M_PI / 2 + 2.0 * M_PI * static_cast<double>(axis) / axes;
    return std::pair<double, double>{cx + radius * std::cos(angle),
                                     cy + radius * std::sin(angle)};
  };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      format_score(kSize) + "\" height=\"" + format_score(kSize) + "\">\n";
  // Axis spokes and labels.
  for (std::size_t a = 0; a < axes; ++a) {
    auto [x, y] = point(a, kRadius);
    svg += "  <line x1=\"" + format_score(cx) + "\" y1=\"" + format_score(cy) +
           "\" x2=\"" + format_score(x) + "\" y2=\"" + format_score(y) +
           "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    auto [lx, ly] = point(a, kRadius + 18.0);
    svg += "  <text x=\"" + format_score(lx) + "\" y=\"" + format_score(ly) +
           "\" font-size=\"12\" text-anchor=\"middle\">" +
           std::string(aspect_short_name(report.aspects[a].aspect)) +
           "</text>\n";
  }
  // Reference rings at 0.5 and 1.0.
  for (double ring : {0.5, 1.0}) {
    svg += "  <polygon points=\"";
    for (std::size_t a = 0; a < axes; ++a) {
      auto [x, y] = point(a, kRadius * ring);
      svg += format_score(x) + "," + format_score(y) + " ";
    }
    svg += "\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
  }
  const struct {
    const char* color;
    double AspectBias::* member;
  } polygons[] = {
      {"#1f77b4", &AspectBias::ref_g0},
      {"#ff7f0e", &AspectBias::ref_g1},
      {"#2ca02c", &AspectBias::gen_g0},
      {"#d62728", &AspectBias::gen_g1},
  };
  for (const auto& polygon : polygons) {
    svg += "  <polygon points=\"";
    for (std::size_t a = 0; a < axes; ++a) {
      auto [x, y] = point(a, kRadius * report.aspects[a].*polygon.member);
      svg += format_score(x) + "," + format_score(y) + " ";
    }
    svg += "\" fill=\"none\" stroke=\"";
    svg += polygon.color;
    svg += "\" stroke-width=\"2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace revtk
