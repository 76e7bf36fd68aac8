#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqa {

// Malformed bracketed tree text. offset is the 1-based character position
// the reader stopped at.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Invalid corpus, document, knowledge-base or resource data. line is 1-based,
// 0 when the error is not tied to a line.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pqa
