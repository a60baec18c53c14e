#include "revtk/aspect.hpp"

#include <stdexcept>

namespace revtk {

std::string_view aspect_name(Aspect aspect) {
  switch (aspect) {
    case Aspect::Summary: return "summary";
    case Aspect::Motivation: return "motivation";
    case Aspect::Originality: return "originality";
    case Aspect::Soundness: return "soundness";
    case Aspect::Substance: return "substance";
    case Aspect::Replicability: return "replicability";
    case Aspect::Comparison: return "comparison";
    case Aspect::Clarity: return "clarity";
  }
  return "";
}

std::string_view aspect_short_name(Aspect aspect) {
  switch (aspect) {
    case Aspect::Summary: return "SUM";
    case Aspect::Motivation: return "MOT";
    case Aspect::Originality: return "ORI";
    case Aspect::Soundness: return "SOU";
    case Aspect::Substance: return "SUB";
    case Aspect::Replicability: return "REP";
    case Aspect::Comparison: return "CMP";
    case Aspect::Clarity: return "CLA";
  }
  return "";
}

std::optional<Aspect> aspect_from_name(std::string_view name) {
  if (name == "meaningful_comparison") return Aspect::Comparison;
  for (Aspect aspect : kAllAspects) {
    if (name == aspect_name(aspect)) return aspect;
  }
  return std::nullopt;
}

TokenLabel TokenLabel::tagged(Aspect aspect, Polarity polarity) {
  const bool summary = aspect == Aspect::Summary;
  if (summary != (polarity == Polarity::None)) {
    throw std::invalid_argument(
        summary ? "summary spans carry no polarity"
                : "non-summary aspects need a positive or negative polarity");
  }
  return TokenLabel(aspect, polarity);
}

std::string TokenLabel::code() const {
  if (outside_) return "O";
  if (aspect_ == Aspect::Summary) return "summary";
  std::string code(polarity_ == Polarity::Positive ? "+" : "-");
  code += aspect_name(aspect_);
  return code;
}

TokenLabel TokenLabel::from_code(std::string_view code) {
  if (code == "O") return outside();
  if (code == "summary") return tagged(Aspect::Summary, Polarity::None);
  if (code.size() >= 2 && (code[0] == '+' || code[0] == '-')) {
    if (auto aspect = aspect_from_name(code.substr(1));
        aspect && *aspect != Aspect::Summary) {
      return tagged(*aspect, code[0] == '+' ? Polarity::Positive
                                            : Polarity::Negative);
    }
  }
  throw std::invalid_argument("unknown label code: \"" + std::string(code) +
                              "\"");
}

}  // namespace revtk
