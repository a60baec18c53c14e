#ifndef REVTK_ERRORS_HPP
#define REVTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace revtk {

/// Error raised while reading an input file. Carries the file name and the
/// 1-based line number (0 when the failure is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, const std::string& message)
      : std::runtime_error(format(file, line, message)),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& file, int line,
                            const std::string& message) {
    if (file.empty()) return message;
    if (line <= 0) return file + ": " + message;
    return file + ":" + std::to_string(line) + ": " + message;
  }

  std::string file_;
  int line_;
};

}  // namespace revtk

#endif  // REVTK_ERRORS_HPP
