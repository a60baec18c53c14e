#ifndef REVTK_CONFIG_HPP
#define REVTK_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "revtk/extraction.hpp"
#include "revtk/metrics.hpp"

namespace revtk {

/// Tool-wide configuration. Every field has a usable default; a JSON config
/// file (--config or the REVTK_CONFIG environment variable) overrides them.
struct ToolConfig {
  std::optional<std::filesystem::path> keywords_path;
  std::optional<std::filesystem::path> stopwords_path;
  RatingScale rating_scale;
  CEConfig ce;
  std::optional<std::filesystem::path> output_dir;
  int parallelism = 0;  // 0 = hardware concurrency

  /// Loads and validates a config file; file paths must resolve. Throws
  /// ParseError on schema or resolution failures.
  static ToolConfig load(const std::filesystem::path& path);

  /// The keyword table: the configured file, or the bundled 48 defaults.
  std::vector<std::string> keywords() const;

  /// The stopword list: the configured file, or the bundled defaults.
  StopwordSet stopwords() const;

  /// Resolves an output path against output_dir (absolute paths pass
  /// through).
  std::filesystem::path resolve_output(const std::filesystem::path& out) const;
};

}  // namespace revtk

#endif  // REVTK_CONFIG_HPP
