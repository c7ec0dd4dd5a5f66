#include "dedesym/classical.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dedesym {

CoprimePair CoprimePair::of(const Integer& a, const Integer& c) {
  if (c <= 0) throw std::invalid_argument("coprime pair needs c > 0, got c=" + c.get_str());
  if (gcd(a, c) != 1) throw std::invalid_argument("gcd(" + a.get_str() + ", " + c.get_str() + ") != 1");
  return {a, c};
}

IntegerMatrix IntegerMatrix::checked(Integer a, Integer b, Integer c, Integer d) {
  IntegerMatrix m{std::move(a), std::move(b), std::move(c), std::move(d)};
  if (m.determinant() != 1) throw std::invalid_argument("matrix determinant is " + m.determinant().get_str() + ", expected 1");
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Rational sawtooth(const Rational& x) {
  if (x.get_den() == 1) return 0;
  return x - Rational(floor(x)) - Rational(1, 2);
}

Rational dedekind_sum_naive(const CoprimePair& p) {
  const Integer& c = p.c;
  const Integer a = mod(p.a, c);
  // ((k/c)) ((ak/c)) = (2k - c)(2r - c) / (4c^2) with r = ak mod c, r != 0.
  if (c.fits_slong_p() && c < (Integer(1) << 30)) {
    const long cc = c.get_si();
    const long aa = a.get_si();
    __int128 sum = 0;
    long r = 0;
    for (long k = 1; k < cc; ++k) {
      r += aa;
      if (r >= cc) r -= cc;
      sum += static_cast<__int128>(2 * k - cc) * (2 * r - cc);
    }
    // |sum| < c^3 < 2^90; split through two 64-bit halves.
    const bool negative = sum < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-sum) : static_cast<unsigned __int128>(sum);
    Integer hi(static_cast<unsigned long>(mag >> 64));
    Integer lo(static_cast<unsigned long>(mag & ~0ULL));
    Integer total = (hi << 64) + lo;
    if (negative) total = -total;
    return ratio(total, 4 * c * c);
  }
  Integer sum = 0;
  Integer r = 0;
  for (Integer k = 1; k < c; ++k) {
    r = mod(r + a, c);
    sum += (2 * k - c) * (2 * r - c);
  }
  return ratio(sum, 4 * c * c);
}

Rational dedekind_sum_fast(const CoprimePair& p) {
  Integer c = p.c;
  Integer a = mod(p.a, c);
  Rational acc = 0;
  int parity = 1;
  // s(a,c) = -s(c,a) + (a/c + 1/(ac) + c/a)/12 - 1/4, then s(c,a) = s(c mod a, a).
  while (c > 1) {
    Rational step(a * a + c * c + 1, 12 * a * c);
    step.canonicalize();
    step -= Rational(1, 4);
    if (parity > 0) {
      acc += step;
    } else {
      acc -= step;
    }
    parity = -parity;
    Integer next = mod(c, a);
    c = std::move(a);
    a = std::move(next);
  }
  return acc;
}

Rational rademacher_phi(const IntegerMatrix& m) {
  if (m.c == 0) {
    Rational r(m.b, 12 * m.d);
    r.canonicalize();
    if (m.d < 0) r -= Rational(1, 2);
    return r;
  }
  Rational r(m.a + m.d, 12 * m.c);
  r.canonicalize();
  const Integer abs_c = abs(m.c);
  const Rational s = dedekind_sum_fast({m.a, abs_c});
  return m.c > 0 ? Rational(r - s) : Rational(r + s);
}

Rational rademacher_psi(const IntegerMatrix& m) { return rademacher_phi(m) - ratio(sgn(m.c), 4); }

Rational reciprocity_residual(const Integer& a, const Integer& c) {
  if (a <= 0 || c <= 0) throw std::invalid_argument("reciprocity_residual needs a, c > 0");
  const Rational lhs = dedekind_sum_fast(CoprimePair::of(a, c)) + dedekind_sum_fast(CoprimePair::of(c, a));
  Rational rhs(a * a + 1 + c * c, 12 * a * c);
  rhs.canonicalize();
  return lhs - rhs + Rational(1, 4);
}

// ---------------------------------------------------------------------------

std::complex<long double> log_eta(std::complex<long double> z, long min_terms) {
  using C = std::complex<long double>;
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double y = z.imag();
  if (!(y > 0)) throw std::invalid_argument("log_eta needs Im(z) > 0");
  // Tail after N terms is bounded by r^(N+1)/(1-r) with r = |e(z)|.
  const long double r = std::exp(-two_pi * y);
  const long double log_r = -two_pi * y;
  const long double target = std::log(1e-16L * -std::expm1(log_r));
  long n_terms = static_cast<long>(std::ceil(target / log_r));
  n_terms = std::max(n_terms, min_terms);

  C sum(0, 0);
  C qn(1, 0);
  C q(0, 0);
  for (long n = 1; n <= n_terms; ++n) {
    if ((n & 255) == 1) {
      // resynchronize the power recurrence
      const long double mod = std::exp(-two_pi * y * static_cast<long double>(n));
      long double phase = z.real() * static_cast<long double>(n);
      phase -= std::floor(phase);
      qn = std::polar(mod, two_pi * phase);
      q = std::polar(r, two_pi * (z.real() - std::floor(z.real())));
    } else {
      qn *= q;
    }
    if (std::norm(qn) < 1e-6L) {
      // log(1-u) = -(u + u^2/2 + ... ), truncated where |u|^7/7 < 1e-21
      C u = qn, term = qn, acc = qn;
      for (int k = 2; k <= 6; ++k) {
        term *= u;
        acc += term / static_cast<long double>(k);
      }
      sum -= acc;
    } else {
      sum += std::log(C(1, 0) - qn);
    }
  }
  return C(0, std::numbers::pi_v<long double> / 12) * z + sum;
}

double phi_via_eta(const IntegerMatrix& m, std::complex<double> z, long terms) {
  using C = std::complex<long double>;
  if (!(z.imag() > 0)) throw std::invalid_argument("phi_via_eta needs Im(z) > 0");
  const C zz(z.real(), z.imag());
  const long double a = m.a.get_d(), b = m.b.get_d(), c = m.c.get_d(), d = m.d.get_d();
  const C j = c * zz + d;
  C gz;
  if (m.c == 0) {
    gz = (a * zz + b) / d;
  } else {
    // Im(gz) = Im(z)/|cz+d|^2 computed without cancellation
    const C num = a * zz + b;
    gz = num / j;
    gz.imag(z.imag() / std::norm(j));
  }
  C half_log;
  if (m.c == 0) {
    half_log = 0.5L * std::log(C(d, 0));
  } else {
    const C i_sign(0, m.c > 0 ? 1.0L : -1.0L);
    half_log = 0.5L * std::log(j / i_sign);
  }
  const C diff = log_eta(gz, terms) - log_eta(zz, terms) - half_log;
  const C phi = diff / C(0, std::numbers::pi_v<long double>);
  return static_cast<double>(phi.real());
}

}  // namespace dedesym
