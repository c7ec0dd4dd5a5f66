#pragma once

#include <mpfr.h>

#include <string>

#include "dedesym/rational.hpp"

namespace dedesym {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t bits);
  static Interval enclose(const Rational& x, mpfr_prec_t bits);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat& lo() { return lo_; }
  BigFloat& hi() { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  bool contains_zero() const;
  /// Sign of every point of the interval, or 0 when the interval straddles 0.
  int certain_sign() const;

  double lower() const;
  double upper() const;
  double midpoint() const;
  double width() const;
  /// Base-2 exponent bound of the width; returns a very negative value for a point interval.
  long width_exponent() const;
  /// Midpoint printed with the given number of significant decimal digits.
  std::string midpoint_string(int digits) const;

  Interval& operator+=(const Interval& other);
  Interval operator-() const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// Product of an arbitrary interval with one whose lower end is > 0.
Interval multiply_by_positive(const Interval& x, const Interval& positive);
/// Quotient of two intervals; the divisor must exclude 0.
Interval divide(const Interval& x, const Interval& y);

}  // namespace dedesym
