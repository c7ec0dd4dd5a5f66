#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dedesym/parse_error.hpp"

namespace dedesym {

enum class Generator { Iota, Tau };

struct Letter {
  Generator generator;
  long exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word over {iota, tau}. Adjacent letters with the same generator are merged
/// on append; iota exponents are kept in {-1, 1, 2} since iota^4 = I.
class Word {
 public:
  Word() = default;

  /// Comma-separated letters `i`, `i^<k>`, `t`, `t^<k>`; e.g. "i,t^2,i,t^-1".
  static Word parse(std::string_view text);

  void append(Generator g, long exponent);
  void append(const Word& other);

  const std::vector<Letter>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Word inverse() const;
  std::string to_string() const;

  friend Word operator+(Word x, const Word& y) {
    x.append(y);
    return x;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace dedesym
