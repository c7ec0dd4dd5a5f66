#include "dedesym/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace dedesym {

namespace {

using IntPoly = std::vector<Integer>;  // ascending coefficients

// Exact division by a monic polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (size_t k = num.size(); k-- > dn;) {
    Integer lead = num[k];
    quot[k - dn] = lead;
    if (lead == 0) continue;
    for (size_t i = 0; i <= dn; ++i) num[k - dn + i] -= lead * den[i];
  }
  for (size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

IntPoly cyclotomic(long n) {
  static std::mutex mu;
  static std::map<long, IntPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPoly p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic(d));
  }
  std::lock_guard lock(mu);
  memo.emplace(n, p);
  return p;
}

// Enclosure of lambda_q = 2cos(pi/q); cos is decreasing on [0, pi].
Interval lambda_enclosure(int q, mpfr_prec_t bits) {
  BigFloat pi_lo(bits), pi_hi(bits);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_div_ui(pi_lo.get(), pi_lo.get(), static_cast<unsigned long>(q), MPFR_RNDD);
  mpfr_div_ui(pi_hi.get(), pi_hi.get(), static_cast<unsigned long>(q), MPFR_RNDU);
  Interval r(bits);
  mpfr_cos(r.lo().get(), pi_hi.get(), MPFR_RNDD);
  mpfr_cos(r.hi().get(), pi_lo.get(), MPFR_RNDU);
  mpfr_mul_2ui(r.lo().get(), r.lo().get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(r.hi().get(), r.hi().get(), 1, MPFR_RNDU);
  return r;
}

}  // namespace

long totient(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

double MinimalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

MinimalPolynomial minimal_poly(int q) {
  if (q < 3) throw std::invalid_argument("minimal_poly: q must be >= 3, got " + std::to_string(q));
  // lambda_q = z + 1/z for a primitive 2q-th root of unity z. The cyclotomic
  // polynomial is palindromic of degree 2m, so Phi(x) = x^m Psi(x + 1/x) with
  // x^k + x^-k = V_k(x + 1/x), V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}.
  const IntPoly phi = cyclotomic(2L * q);
  const size_t m = (phi.size() - 1) / 2;
  IntPoly psi(m + 1, 0);
  psi[0] = phi[m];
  IntPoly v_prev{2};
  IntPoly v_cur{0, 1};
  for (size_t k = 1; k <= m; ++k) {
    const Integer& coef = phi[m + k];
    for (size_t i = 0; i < v_cur.size(); ++i) psi[i] += coef * v_cur[i];
    IntPoly v_next(v_cur.size() + 1, 0);
    for (size_t i = 0; i < v_cur.size(); ++i) v_next[i + 1] += v_cur[i];
    for (size_t i = 0; i < v_prev.size(); ++i) v_next[i] -= v_prev[i];
    v_prev = std::move(v_cur);
    v_cur = std::move(v_next);
  }
  if (psi.back() != 1) throw std::logic_error("minimal_poly: result is not monic");

  MinimalPolynomial result;
  result.q = q;
  for (const auto& c : psi) result.coefficients.emplace_back(c);

  // Numerical root check at 256 bits.
  BigFloat acc(256), lam(256), coef(256);
  mpfr_const_pi(lam.get(), MPFR_RNDN);
  mpfr_div_ui(lam.get(), lam.get(), static_cast<unsigned long>(q), MPFR_RNDN);
  mpfr_cos(lam.get(), lam.get(), MPFR_RNDN);
  mpfr_mul_2ui(lam.get(), lam.get(), 1, MPFR_RNDN);
  mpfr_set_zero(acc.get(), 1);
  for (auto it = psi.rbegin(); it != psi.rend(); ++it) {
    mpfr_mul(acc.get(), acc.get(), lam.get(), MPFR_RNDN);
    mpfr_set_z(coef.get(), it->get_mpz_t(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), coef.get(), MPFR_RNDN);
  }
  if (std::fabs(mpfr_get_d(acc.get(), MPFR_RNDN)) > 1e-12) {
    throw std::logic_error("minimal_poly: 2cos(pi/q) is not a root");
  }
  return result;
}

// ---------------------------------------------------------------------------

const Field& Field::of(int q) {
  if (q < 3) throw std::invalid_argument("Field: q must be >= 3, got " + std::to_string(q));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[q];
  if (!slot) slot.reset(new Field(q));
  return *slot;
}

Field::Field(int q) : q_(q), poly_(minimal_poly(q)) {
  degree_ = poly_.degree();
  const double lam = 2.0 * std::cos(std::numbers::pi / q);
  double p = 1.0;
  for (int k = 0; k < degree_; ++k) {
    lambda_powers_double_.push_back(p);
    p *= lam;
  }
}

std::shared_ptr<const std::vector<Interval>> Field::lambda_powers(mpfr_prec_t bits) const {
  std::lock_guard lock(cache_mutex_);
  for (const auto& [b, v] : cache_) {
    if (b == bits) return v;
  }
  auto powers = std::make_shared<std::vector<Interval>>();
  Interval one(bits);
  mpfr_set_ui(one.lo().get(), 1, MPFR_RNDD);
  mpfr_set_ui(one.hi().get(), 1, MPFR_RNDU);
  powers->push_back(one);
  const Interval lam = lambda_enclosure(q_, bits);
  for (int k = 1; k < degree_; ++k) powers->push_back(multiply_by_positive(powers->back(), lam));
  if (cache_.size() < 16) cache_.emplace_back(bits, powers);
  return powers;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const Field& field) : field_(&field), coords_(static_cast<size_t>(field.degree())) {}

FieldElement::FieldElement(const Field& field, const Rational& value) : FieldElement(field) { coords_[0] = value; }

FieldElement::FieldElement(const Field& field, std::span<const Rational> coords) : FieldElement(field) {
  if (coords.size() > coords_.size()) {
    // Reduce higher powers through the minimal polynomial.
    FieldElement acc(field);
    FieldElement power(field, Rational(1));
    const FieldElement lam = lambda(field);
    for (const auto& c : coords) {
      acc += power * c;
      power *= lam;
    }
    coords_ = std::move(acc.coords_);
    return;
  }
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

FieldElement FieldElement::lambda(const Field& field) {
  FieldElement r(field);
  if (field.degree() == 1) {
    r.coords_[0] = -field.minimal_polynomial().coefficients[0];
  } else {
    r.coords_[1] = 1;
  }
  return r;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (field_ != other.field_) {
    throw std::invalid_argument("field mismatch: q=" + std::to_string(q()) + " vs q=" + std::to_string(other.q()));
  }
}

bool FieldElement::try_double_estimate(double& value, double& error) const {
  double sum = 0.0, abs_sum = 0.0;
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    const double c = coords_[k].get_d();
    if (!std::isfinite(c) || std::fabs(c) > 1e280 || std::fabs(c) < 1e-280) return false;
    const double t = c * field_->lambda_power(static_cast<int>(k));
    sum += t;
    abs_sum += std::fabs(t);
  }
  value = sum;
  // Coordinates and powers carry relative error below 2^-50; the sum adds a
  // few ulps per term. 1e-12 leaves a wide margin.
  error = abs_sum * 1e-12;
  return true;
}

Interval FieldElement::enclose(mpfr_prec_t working_bits) const {
  auto powers = field_->lambda_powers(working_bits);
  Interval acc(working_bits);
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    acc += multiply_by_positive(Interval::enclose(coords_[k], working_bits), (*powers)[k]);
  }
  return acc;
}

Interval FieldElement::to_interval(mpfr_prec_t bits) const {
  if (bits < 53) throw std::invalid_argument("to_interval: bits must be >= 53");
  mpfr_prec_t working = bits + 32;
  for (;;) {
    Interval iv = enclose(working);
    if (iv.width_exponent() <= 1 - bits) return iv;
    working *= 2;
  }
}

double FieldElement::to_double() const {
  double v = 0.0, err = 0.0;
  if (field_->degree() == 1) return coords_[0].get_d();
  if (try_double_estimate(v, err)) return v;
  return enclose(128).midpoint();
}

int FieldElement::sign() const {
  if (field_->degree() == 1) return sgn(coords_[0]);
  if (is_zero()) return 0;
  double v = 0.0, err = 0.0;
  if (try_double_estimate(v, err) && std::fabs(v) > err) return v > 0 ? 1 : -1;
  // lambda generates the field, so a nonzero element has a nonzero embedding
  // and refinement terminates.
  for (mpfr_prec_t bits = 128;; bits *= 2) {
    const int s = enclose(bits).certain_sign();
    if (s != 0) return s;
  }
}

Integer FieldElement::floor() const {
  if (field_->degree() == 1) return dedesym::floor(coords_[0]);
  double v = 0.0, err = 0.0;
  if (try_double_estimate(v, err) && std::fabs(v) < 1e15) {
    const double lo = std::floor(v - err), hi = std::floor(v + err);
    if (lo == hi) return Integer(lo);
  }
  for (mpfr_prec_t bits = 128;; bits *= 2) {
    Interval iv = enclose(bits);
    Integer lo, hi;
    mpfr_get_z(lo.get_mpz_t(), iv.lo().get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), iv.hi().get(), MPFR_RNDD);
    if (lo == hi) return lo;
    if (hi - lo == 1) {
      // The integer hi lies inside the enclosure; decide exactly.
      return (*this - FieldElement(*field_, Rational(hi))).sign() >= 0 ? hi : lo;
    }
  }
}

FieldElement FieldElement::inverse() const {
  const int n = field_->degree();
  if (is_zero()) throw std::domain_error("division by zero in Q(lambda_" + std::to_string(q()) + ")");
  if (n == 1) {
    FieldElement r(*field_);
    r.coords_[0] = 1 / coords_[0];
    return r;
  }
  // Solve (x * y = 1) as a linear system; column j of the matrix is x * L^j.
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n) + 1));
  FieldElement col = *this;
  const FieldElement lam = lambda(*field_);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coords_[static_cast<size_t>(i)];
    if (j + 1 < n) col *= lam;
  }
  m[0][static_cast<size_t>(n)] = 1;
  const size_t N = static_cast<size_t>(n);
  for (size_t c = 0; c < N; ++c) {
    size_t p = c;
    while (p < N && m[p][c] == 0) ++p;
    if (p == N) throw std::domain_error("inverse: singular multiplication matrix");
    std::swap(m[p], m[c]);
    const Rational pivot = m[c][c];
    for (size_t k = c; k <= N; ++k) m[c][k] /= pivot;
    for (size_t r = 0; r < N; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (size_t k = c; k <= N; ++k) m[r][k] -= f * m[c][k];
    }
  }
  FieldElement r(*field_);
  for (size_t i = 0; i < N; ++i) r.coords_[i] = m[i][N];
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(other);
  for (size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(other);
  for (size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  *this = *this * other;
  return *this;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  x.require_same_field(y);
  const size_t n = x.coords_.size();
  FieldElement r(*x.field_);
  if (n == 1) {
    r.coords_[0] = x.coords_[0] * y.coords_[0];
    return r;
  }
  boost::container::small_vector<Rational, 8> prod(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (x.coords_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y.coords_[j] == 0) continue;
      prod[i + j] += x.coords_[i] * y.coords_[j];
    }
  }
  // L^n = -sum_{i<n} m_i L^i
  const auto& m = x.field_->minimal_polynomial().coefficients;
  for (size_t k = 2 * n - 2; k >= n; --k) {
    if (prod[k] == 0) continue;
    const Rational lead = prod[k];
    for (size_t i = 0; i < n; ++i) {
      if (m[i] != 0) prod[k - n + i] -= lead * m[i];
    }
  }
  for (size_t i = 0; i < n; ++i) r.coords_[i] = std::move(prod[i]);
  return r;
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.field_ == y.field_ && std::equal(x.coords_.begin(), x.coords_.end(), y.coords_.begin());
}

bool coords_less(const FieldElement& x, const FieldElement& y) {
  const auto a = x.coords(), b = y.coords();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& u, const Rational& v) { return cmp(u, v) < 0; });
}

int compare(const FieldElement& x, const FieldElement& y) { return (x - y).sign(); }

int compare_abs(const FieldElement& x, const FieldElement& y) {
  const int sx = x.sign(), sy = y.sign();
  FieldElement ax = sx < 0 ? -x : x;
  FieldElement ay = sy < 0 ? -y : y;
  return (ax - ay).sign();
}

// ---------------------------------------------------------------------------

std::string FieldElement::to_string() const {
  const size_t n = coords_.size();
  std::string out;
  bool first = true;
  for (size_t k = 0; k < n; ++k) {
    const Rational& c = coords_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string power;
    if (k == 1) power = "L";
    if (k >= 2) power = "L^" + std::to_string(k);
    if (power.empty()) {
      out += dedesym::to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += dedesym::to_string(mag) + "*" + power;
    }
  }
  return first ? std::string("0") : out;
}

FieldElement FieldElement::parse(const Field& field, std::string_view text) {
  // sum of terms: [sign] (rational ['*' 'L' ['^' k]] | 'L' ['^' k]); blanks allowed between tokens
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto peek = [&](char ch) { return pos < text.size() && text[pos] == ch; };

  std::vector<Rational> coeffs;
  skip();
  if (pos == text.size()) throw ParseError("empty field element", pos);
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (peek('+') || peek('-')) {
      negative = peek('-');
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    Rational coef(1);
    size_t power = 0;
    bool has_l = peek('L');
    if (!has_l) {
      const size_t start = pos;
      const auto num = digits();
      if (num.empty()) throw ParseError("expected a number or L", start);
      Integer n{std::string(num)}, d{1};
      if (peek('/')) {
        ++pos;
        const size_t den_at = pos;
        const auto den = digits();
        if (den.empty()) throw ParseError("expected a denominator", den_at);
        d = Integer(std::string(den));
        if (d == 0) throw ParseError("zero denominator", den_at);
      }
      coef = ratio(n, d);
      skip();
      if (peek('*')) {
        ++pos;
        skip();
        if (!peek('L')) throw ParseError("expected L after '*'", pos);
        has_l = true;
      }
    }
    if (has_l) {
      ++pos;
      power = 1;
      if (peek('^')) {
        ++pos;
        const size_t at = pos;
        const auto k = digits();
        if (k.empty() || k.size() > 6) throw ParseError("expected a power of L", at);
        power = std::stoul(std::string(k));
      }
    }
    if (negative) coef = -coef;
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += coef;
  }
  return FieldElement(field, std::span<const Rational>(coeffs));
}

}  // namespace dedesym
