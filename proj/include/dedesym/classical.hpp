#pragma once

#include <complex>

#include "dedesym/rational.hpp"

namespace dedesym {

/// (a, c) with gcd(a, c) = 1 and c > 0.
struct CoprimePair {
  Integer a;
  Integer c;

  /// Throws std::invalid_argument unless c > 0 and gcd(a, c) = 1.
  static CoprimePair of(const Integer& a, const Integer& c);
};

/// Element of SL2(Z).
struct IntegerMatrix {
  Integer a{1}, b{0}, c{0}, d{1};

  static IntegerMatrix identity() { return {}; }
  static IntegerMatrix iota() { return {0, -1, 1, 0}; }
  static IntegerMatrix translation(const Integer& n) { return {1, n, 0, 1}; }
  /// Throws std::invalid_argument unless ad - bc = 1.
  static IntegerMatrix checked(Integer a, Integer b, Integer c, Integer d);

  Integer determinant() const { return a * d - b * c; }
  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
  friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) = default;
};

/// ((x)): 0 on integers, x - floor(x) - 1/2 elsewhere.
Rational sawtooth(const Rational& x);

/// s(a, c) straight from the defining sum; O(c).
Rational dedekind_sum_naive(const CoprimePair& p);

/// s(a, c) by Euclid-style descent through the reciprocity law; O(log c) steps.
Rational dedekind_sum_fast(const CoprimePair& p);

/// Rademacher's phi on SL2(Z):
///   c != 0: (a + d)/(12c) - sign(c) s(a, |c|)
///   c == 0: b/(12d), minus 1/2 when d < 0.
Rational rademacher_phi(const IntegerMatrix& m);

/// psi = phi - sign(c)/4, with sign(0) = 0.
Rational rademacher_psi(const IntegerMatrix& m);

/// Numerical phi recovered from the transformation law of log eta, using the
/// truncated eta product with principal-branch logarithms. The number of
/// product terms is raised above `terms` until the dropped tail at m(z) is
/// below 1e-16. Im(z) must be positive.
double phi_via_eta(const IntegerMatrix& m, std::complex<double> z = {0.0, 1.0}, long terms = 64);

/// log eta(z) on the holomorphic branch pi i z/12 + sum log(1 - e(nz)).
std::complex<long double> log_eta(std::complex<long double> z, long min_terms = 64);

/// s(a,c) + s(c,a) - (a/c + 1/(ac) + c/a)/12 + 1/4; zero for coprime a, c > 0.
Rational reciprocity_residual(const Integer& a, const Integer& c);

}  // namespace dedesym
