#pragma once

#include <string>
#include <string_view>

#include "dedesym/classical.hpp"
#include "dedesym/field.hpp"

namespace dedesym {

/// 2x2 matrix of determinant 1 over Q(lambda_q).
class GroupElement {
 public:
  /// Throws std::invalid_argument unless ad - bc = 1 and all entries share a field.
  GroupElement(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

  static GroupElement identity(const Field& field);
  static GroupElement from_integer(const Field& field, const IntegerMatrix& m);
  /// Four comma-separated field literals `a,b,c,d`.
  static GroupElement parse(const Field& field, std::string_view text);

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  const FieldElement& d() const { return d_; }
  const Field& field() const { return a_.field(); }

  GroupElement inverse() const;
  GroupElement operator-() const;
  std::string to_string() const;

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement& x, const GroupElement& y);

 private:
  struct Unchecked {};
  GroupElement(Unchecked, FieldElement a, FieldElement b, FieldElement c, FieldElement d);

  FieldElement a_, b_, c_, d_;
};

}  // namespace dedesym
