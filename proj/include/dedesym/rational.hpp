#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dedesym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest integer <= x.
Integer floor(const Rational& x);

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Euclidean remainder in [0, |m|).
Integer mod(const Integer& x, const Integer& m);

int sign(const Integer& x);
int sign(const Rational& x);

/// Canonical text: `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& x);

/// Accepts `p`, `p/q`, and optional leading sign. Result is canonicalized.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace dedesym
