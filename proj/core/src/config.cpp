#include "revtk/config.hpp"

#include <fstream>

#include "revtk/io.hpp"

namespace revtk {

namespace fs = std::filesystem;

namespace {

fs::path resolve_existing(const fs::path& base, const std::string& value,
                          const std::string& file) {
  fs::path path(value);
  if (path.is_relative() && !base.empty()) path = base / path;
  if (!fs::exists(path))
    throw ParseError(file, 0, "path does not resolve: " + path.string());
  return path;
}

}  // namespace

ToolConfig ToolConfig::load(const fs::path& path) {
  const std::string file = path.string();
  std::ifstream in(path);
  if (!in) throw ParseError(file, 0, "cannot open config file");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError(file, 0, "invalid JSON");
  if (!j.is_object()) throw ParseError(file, 0, "config must be a JSON object");

  ToolConfig config;
  const fs::path base = path.parent_path();

  if (auto it = j.find("keywords"); it != j.end() && !it->is_null())
    config.keywords_path = resolve_existing(base, it->get<std::string>(), file);
  if (auto it = j.find("stopwords"); it != j.end() && !it->is_null())
    config.stopwords_path =
        resolve_existing(base, it->get<std::string>(), file);
  if (auto it = j.find("output_dir"); it != j.end() && !it->is_null())
    config.output_dir = fs::path(it->get<std::string>());
  if (auto it = j.find("parallelism"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<int>() < 0)
      throw ParseError(file, 0, "parallelism must be a non-negative integer");
    config.parallelism = it->get<int>();
  }
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned())
      throw ParseError(file, 0, "seed must be a non-negative integer");
    config.ce.seed = it->get<std::uint64_t>();
  }

  if (auto it = j.find("rating_scale"); it != j.end() && !it->is_null()) {
    const json& scale = *it;
    auto read = [&](const char* field, int fallback) {
      auto fit = scale.find(field);
      if (fit == scale.end()) return fallback;
      if (!fit->is_number_integer())
        throw ParseError(file, 0, std::string("rating_scale.") + field +
                                      " must be an integer");
      return fit->get<int>();
    };
    config.rating_scale.min = read("min", config.rating_scale.min);
    config.rating_scale.max = read("max", config.rating_scale.max);
    config.rating_scale.neutral_min =
        read("neutral_min", config.rating_scale.neutral_min);
    config.rating_scale.neutral_max =
        read("neutral_max", config.rating_scale.neutral_max);
    try {
      config.rating_scale.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(file, 0, e.what());
    }
  }

  if (auto it = j.find("ce"); it != j.end() && !it->is_null()) {
    const json& ce = *it;
    if (!ce.is_object()) throw ParseError(file, 0, "\"ce\" must be an object");
    auto read_int = [&](const char* field, int fallback) {
      auto fit = ce.find(field);
      if (fit == ce.end()) return fallback;
      if (!fit->is_number_integer())
        throw ParseError(file, 0, std::string("ce.") + field +
                                      " must be an integer");
      return fit->get<int>();
    };
    auto read_double = [&](const char* field, double fallback) {
      auto fit = ce.find(field);
      if (fit == ce.end()) return fallback;
      if (!fit->is_number())
        throw ParseError(file, 0,
                         std::string("ce.") + field + " must be a number");
      return fit->get<double>();
    };
    config.ce.sample_count = read_int("sample_count", config.ce.sample_count);
    config.ce.elite_fraction =
        read_double("elite_fraction", config.ce.elite_fraction);
    config.ce.smoothing = read_double("smoothing", config.ce.smoothing);
    config.ce.max_sentences =
        read_int("max_sentences", config.ce.max_sentences);
    config.ce.stall_iterations =
        read_int("stall_iterations", config.ce.stall_iterations);
    config.ce.max_iterations =
        read_int("max_iterations", config.ce.max_iterations);
    config.ce.resample_cap_multiplier =
        read_int("resample_cap_multiplier", config.ce.resample_cap_multiplier);
    try {
      config.ce.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(file, 0, e.what());
    }
  }
  return config;
}

std::vector<std::string> ToolConfig::keywords() const {
  if (keywords_path) return load_word_list(*keywords_path);
  return default_keywords();
}

StopwordSet ToolConfig::stopwords() const {
  if (stopwords_path) return StopwordSet(load_word_list(*stopwords_path));
  return StopwordSet(default_stopwords());
}

fs::path ToolConfig::resolve_output(const fs::path& out) const {
  if (out.is_absolute() || !output_dir) return out;
  return *output_dir / out;
}

}  // namespace revtk
