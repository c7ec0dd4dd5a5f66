#pragma once

#include <boost/container/small_vector.hpp>

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dedesym/interval.hpp"
#include "dedesym/parse_error.hpp"
#include "dedesym/rational.hpp"

namespace dedesym {

/// Minimal polynomial of lambda_q = 2cos(pi/q) over the rationals.
struct MinimalPolynomial {
  int q = 0;
  /// Ascending coefficients, monic: coefficients.back() == 1.
  std::vector<Rational> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double evaluate(double x) const;
};

/// Throws std::invalid_argument for q < 3.
MinimalPolynomial minimal_poly(int q);

/// Euler's totient.
long totient(long n);

class FieldElement;

/// The totally real field Q(lambda_q) with its distinguished embedding
/// lambda_q -> 2cos(pi/q). Instances are interned per q and never destroyed.
class Field {
 public:
  static const Field& of(int q);

  int q() const { return q_; }
  int degree() const { return degree_; }
  const MinimalPolynomial& minimal_polynomial() const { return poly_; }

  /// lambda^k in double precision, k < degree.
  double lambda_power(int k) const { return lambda_powers_double_[static_cast<size_t>(k)]; }
  /// Enclosures of lambda^0 .. lambda^(degree-1) at the given precision.
  std::shared_ptr<const std::vector<Interval>> lambda_powers(mpfr_prec_t bits) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  explicit Field(int q);

  int q_;
  int degree_;
  MinimalPolynomial poly_;
  std::vector<double> lambda_powers_double_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::pair<mpfr_prec_t, std::shared_ptr<const std::vector<Interval>>>> cache_;
};

/// Element of Q(lambda_q) in the power basis 1, L, L^2, ... of lambda_q.
class FieldElement {
 public:
  using Coords = boost::container::small_vector<Rational, 4>;

  explicit FieldElement(const Field& field);
  FieldElement(const Field& field, const Rational& value);
  FieldElement(const Field& field, std::span<const Rational> coords);

  static FieldElement lambda(const Field& field);

  const Field& field() const { return *field_; }
  int q() const { return field_->q(); }
  std::span<const Rational> coords() const { return {coords_.data(), coords_.size()}; }
  const Rational& coord(int k) const { return coords_[static_cast<size_t>(k)]; }

  bool is_zero() const;
  bool is_rational() const;
  /// Exact sign under the distinguished embedding.
  int sign() const;
  FieldElement abs() const { return sign() < 0 ? -*this : *this; }
  FieldElement inverse() const;
  /// Largest integer <= the embedded value.
  Integer floor() const;

  /// Enclosure of the embedded value with absolute width < 2^(1-bits).
  Interval to_interval(mpfr_prec_t bits) const;
  /// Enclosure at a fixed working precision; width not controlled.
  Interval enclose(mpfr_prec_t working_bits) const;
  double to_double() const;

  /// Text form, e.g. `1/2 + 3/4*L - L^2`.
  std::string to_string() const;
  static FieldElement parse(const Field& field, std::string_view text);

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator*=(const Rational& scalar);
  FieldElement& operator/=(const FieldElement& other) { return *this *= other.inverse(); }

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(FieldElement x, const Rational& y) { return x *= y; }
  friend FieldElement operator*(const Rational& y, FieldElement x) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  void require_same_field(const FieldElement& other) const;
  bool try_double_estimate(double& value, double& error) const;

  const Field* field_;
  Coords coords_;
};

inline int sign(const FieldElement& x) { return x.sign(); }
inline FieldElement inv(const FieldElement& x) { return x.inverse(); }

/// Lexicographic order on coordinates; a total order for use as a map key, unrelated to the embedding.
bool coords_less(const FieldElement& x, const FieldElement& y);
/// Compares |x| and |y| under the embedding.
int compare_abs(const FieldElement& x, const FieldElement& y);
/// Compares x and y under the embedding.
int compare(const FieldElement& x, const FieldElement& y);

}  // namespace dedesym
