#include "dedesym/word.hpp"

#include <cctype>

namespace dedesym {

namespace {

long canonical_iota_exponent(long e) {
  long r = ((e % 4) + 4) % 4;
  return r == 3 ? -1 : r;
}

}  // namespace

void Word::append(Generator g, long exponent) {
  if (g == Generator::Iota) exponent = canonical_iota_exponent(exponent);
  if (exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == g) {
    long merged = letters_.back().exponent + exponent;
    if (g == Generator::Iota) merged = canonical_iota_exponent(merged);
    if (merged == 0) {
      letters_.pop_back();
    } else {
      letters_.back().exponent = merged;
    }
    return;
  }
  letters_.push_back({g, exponent});
}

void Word::append(const Word& other) {
  for (const auto& l : other.letters_) append(l.generator, l.exponent);
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->generator, -it->exponent);
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ',';
    out += l.generator == Generator::Iota ? 'i' : 't';
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

Word Word::parse(std::string_view text) {
  Word w;
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) return w;
  for (;;) {
    skip_space();
    if (pos == text.size()) throw ParseError("expected a letter", pos);
    const char ch = text[pos];
    Generator g;
    if (ch == 'i' || ch == 'I') {
      g = Generator::Iota;
    } else if (ch == 't' || ch == 'T') {
      g = Generator::Tau;
    } else {
      throw ParseError(std::string("unknown generator '") + ch + "'", pos);
    }
    ++pos;
    long exponent = 1;
    skip_space();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space();
      const size_t start = pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      const size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits || pos - digits > 15) throw ParseError("expected an integer exponent", start);
      exponent = std::stol(std::string(text.substr(digits, pos - digits)));
      if (negative) exponent = -exponent;
      if (exponent == 0) throw ParseError("zero exponent", start);
    }
    w.append(g, exponent);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return w;
}

}  // namespace dedesym
