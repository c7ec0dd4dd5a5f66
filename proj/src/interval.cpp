#include "dedesym/interval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace dedesym {

BigFloat::BigFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Interval::Interval(mpfr_prec_t bits) : lo_(bits), hi_(bits) {
  mpfr_set_zero(lo_.get(), 1);
  mpfr_set_zero(hi_.get(), 1);
}

Interval Interval::enclose(const Rational& x, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), x.get_mpq_t(), MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

int Interval::certain_sign() const {
  if (mpfr_sgn(lo_.get()) > 0) return 1;
  if (mpfr_sgn(hi_.get()) < 0) return -1;
  return 0;
}

double Interval::lower() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

double Interval::midpoint() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

double Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

long Interval::width_exponent() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  if (mpfr_zero_p(w.get())) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(w.get());
}

std::string Interval::midpoint_string(int digits) const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, m.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Interval& Interval::operator+=(const Interval& other) {
  mpfr_add(lo_.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
  return *this;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval multiply_by_positive(const Interval& x, const Interval& positive) {
  if (mpfr_sgn(positive.lo().get()) <= 0) throw std::domain_error("multiply_by_positive: factor not positive");
  Interval r(std::max(x.precision(), positive.precision()));
  const bool lo_nonneg = mpfr_sgn(x.lo().get()) >= 0;
  const bool hi_nonpos = mpfr_sgn(x.hi().get()) <= 0;
  // lo end: x.lo times the factor end that makes it smallest
  mpfr_mul(r.lo().get(), x.lo().get(), lo_nonneg ? positive.lo().get() : positive.hi().get(), MPFR_RNDD);
  mpfr_mul(r.hi().get(), x.hi().get(), hi_nonpos ? positive.lo().get() : positive.hi().get(), MPFR_RNDU);
  return r;
}

Interval divide(const Interval& x, const Interval& y) {
  int s = y.certain_sign();
  if (s == 0) throw std::domain_error("interval division by an interval containing 0");
  Interval r(std::max(x.precision(), y.precision()));
  // Candidates are the four endpoint quotients; take outward-rounded extrema.
  mpfr_srcptr xs[2] = {x.lo().get(), x.hi().get()};
  mpfr_srcptr ys[2] = {y.lo().get(), y.hi().get()};
  BigFloat t(r.precision());
  bool first = true;
  for (auto xe : xs) {
    for (auto ye : ys) {
      mpfr_div(t.get(), xe, ye, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo().get())) mpfr_set(r.lo().get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), xe, ye, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi().get())) mpfr_set(r.hi().get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

}  // namespace dedesym
