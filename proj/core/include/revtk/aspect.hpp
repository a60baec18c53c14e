#ifndef REVTK_ASPECT_HPP
#define REVTK_ASPECT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace revtk {

/// The eight review aspects. Summary carries no polarity; every other aspect
/// is mentioned with either positive or negative sentiment.
enum class Aspect {
  Summary,
  Motivation,
  Originality,
  Soundness,
  Substance,
  Replicability,
  Comparison,
  Clarity,
};

inline constexpr std::size_t kAspectCount = 8;

inline constexpr std::array<Aspect, kAspectCount> kAllAspects = {
    Aspect::Summary,      Aspect::Motivation,    Aspect::Originality,
    Aspect::Soundness,    Aspect::Substance,     Aspect::Replicability,
    Aspect::Comparison,   Aspect::Clarity,
};

/// The seven aspects that carry polarity (everything but Summary).
inline constexpr std::array<Aspect, kAspectCount - 1> kPolarAspects = {
    Aspect::Motivation,   Aspect::Originality, Aspect::Soundness,
    Aspect::Substance,    Aspect::Replicability, Aspect::Comparison,
    Aspect::Clarity,
};

enum class Polarity { Positive, Negative, None };

std::string_view aspect_name(Aspect aspect);
std::string_view aspect_short_name(Aspect aspect);  // "SUM", "MOT", ...

/// Parses "summary", "clarity", ... Also accepts "meaningful_comparison" as
/// an alias for "comparison". Returns nullopt for anything else.
std::optional<Aspect> aspect_from_name(std::string_view name);

/// One token's label: either Outside or an (aspect, polarity) tag.
/// The label alphabet has 16 members: O, summary, and 7 aspects x 2
/// polarities. Summary always pairs with Polarity::None.
class TokenLabel {
 public:
  constexpr TokenLabel() = default;  // Outside

  static constexpr TokenLabel outside() { return TokenLabel(); }

  /// Throws std::invalid_argument if the pairing is illegal (None with a
  /// non-summary aspect, or a polarity on Summary).
  static TokenLabel tagged(Aspect aspect, Polarity polarity);

  constexpr bool is_outside() const { return outside_; }
  constexpr bool is_summary() const {
    return !outside_ && aspect_ == Aspect::Summary;
  }

  constexpr Aspect aspect() const { return aspect_; }      // pre: !is_outside()
  constexpr Polarity polarity() const { return polarity_; }

  /// "O", "summary", "+motivation", "-clarity", ...
  std::string code() const;

  /// Inverse of code(). Throws std::invalid_argument on unknown codes.
  static TokenLabel from_code(std::string_view code);

  friend constexpr bool operator==(TokenLabel, TokenLabel) = default;

 private:
  constexpr TokenLabel(Aspect aspect, Polarity polarity)
      : outside_(false), aspect_(aspect), polarity_(polarity) {}

  bool outside_ = true;
  Aspect aspect_ = Aspect::Summary;
  Polarity polarity_ = Polarity::None;
};

/// A maximal run of tokens sharing one non-Outside label.
/// Token range is [start, end), 0 <= start < end <= review length.
struct AspectSpan {
  Aspect aspect = Aspect::Summary;
  Polarity polarity = Polarity::None;
  std::size_t start = 0;
  std::size_t end = 0;

  TokenLabel label() const { return TokenLabel::tagged(aspect, polarity); }
  std::size_t length() const { return end - start; }

  friend bool operator==(const AspectSpan&, const AspectSpan&) = default;
};

}  // namespace revtk

#endif  // REVTK_ASPECT_HPP
