#include "dedesym/group.hpp"

#include <stdexcept>
#include <vector>

namespace dedesym {

GroupElement::GroupElement(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const FieldElement det = a_ * d_ - b_ * c_;
  if (det != FieldElement(det.field(), Rational(1))) {
    throw std::invalid_argument("group element has determinant " + det.to_string() + ", expected 1");
  }
}

GroupElement::GroupElement(Unchecked, FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

GroupElement GroupElement::identity(const Field& field) {
  return {Unchecked{}, FieldElement(field, Rational(1)), FieldElement(field), FieldElement(field),
          FieldElement(field, Rational(1))};
}

GroupElement GroupElement::from_integer(const Field& field, const IntegerMatrix& m) {
  return {FieldElement(field, Rational(m.a)), FieldElement(field, Rational(m.b)), FieldElement(field, Rational(m.c)),
          FieldElement(field, Rational(m.d))};
}

GroupElement GroupElement::parse(const Field& field, std::string_view text) {
  std::vector<FieldElement> entries;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    if (entries.size() == 4) throw ParseError("matrix has more than 4 entries", start - 1);
    try {
      entries.push_back(FieldElement::parse(field, text.substr(start, i - start)));
    } catch (const ParseError& e) {
      throw e.shifted(start);
    }
    start = i + 1;
  }
  if (entries.size() != 4) throw ParseError("matrix needs 4 comma-separated entries", text.size());
  return {entries[0], entries[1], entries[2], entries[3]};
}

GroupElement GroupElement::inverse() const { return {Unchecked{}, d_, -b_, -c_, a_}; }

GroupElement GroupElement::operator-() const { return {Unchecked{}, -a_, -b_, -c_, -d_}; }

std::string GroupElement::to_string() const {
  return "(" + a_.to_string() + ", " + b_.to_string() + "; " + c_.to_string() + ", " + d_.to_string() + ")";
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return {GroupElement::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

bool operator==(const GroupElement& x, const GroupElement& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

}  // namespace dedesym
