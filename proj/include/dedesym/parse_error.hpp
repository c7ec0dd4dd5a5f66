#pragma once

#include <stdexcept>
#include <string>

namespace dedesym {

/// Malformed word, matrix, or field text; `position` is the 0-based offset of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  const std::string& message() const { return message_; }
  size_t position() const { return position_; }
  /// Same error, reported relative to an enclosing text that starts `offset` earlier.
  ParseError shifted(size_t offset) const { return {message_, position_ + offset}; }

 private:
  std::string message_;
  size_t position_;
};

}  // namespace dedesym
