#include <doctest.h>

#include <cmath>
#include <random>

#include "dedesym/field.hpp"
#include "dedesym/parse_error.hpp"

using namespace dedesym;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

FieldElement elt(int q, const char* text) { return FieldElement::parse(Field::of(q), text); }

FieldElement random_element(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int k = 0; k < f.degree(); ++k) c.push_back(ratio(num(rng), den(rng)));
  return FieldElement(f, std::span<const Rational>(c));
}

}  // namespace

TEST_CASE("minimal polynomials of small q") {
  CHECK(minimal_poly(3).coefficients == ints({-1, 1}));
  CHECK(minimal_poly(4).coefficients == ints({-2, 0, 1}));
  CHECK(minimal_poly(5).coefficients == ints({-1, -1, 1}));
  CHECK(minimal_poly(6).coefficients == ints({-3, 0, 1}));
  CHECK(minimal_poly(7).coefficients == ints({1, -2, -1, 1}));
  CHECK_THROWS_AS(minimal_poly(2), std::invalid_argument);
}

TEST_CASE("degree is phi(2q)/2 and lambda is a root") {
  for (int q = 3; q <= 40; ++q) {
    const auto p = minimal_poly(q);
    CHECK(p.degree() == totient(2 * q) / 2);
    CHECK(std::fabs(p.evaluate(2 * std::cos(M_PI / q))) < 1e-9);
    CHECK(FieldElement::lambda(Field::of(q)).to_double() == doctest::Approx(2 * std::cos(M_PI / q)).epsilon(1e-14));
  }
}

TEST_CASE("multiplication reduces through the minimal polynomial") {
  const Field& f5 = Field::of(5);
  const auto L5 = FieldElement::lambda(f5);
  CHECK(L5 * L5 == elt(5, "L + 1"));
  CHECK(L5 * FieldElement(f5, 1) == L5);
  CHECK((elt(4, "L + 1") * elt(4, "L - 1")) == elt(4, "1"));
  CHECK(elt(5, "L^2 - L - 1").is_zero());
  CHECK(elt(7, "L^3") == elt(7, "L^2 + 2*L - 1"));
}

TEST_CASE("inverses") {
  CHECK(inv(elt(5, "L")) == elt(5, "L - 1"));
  CHECK(inv(elt(4, "L")) == elt(4, "1/2*L"));
  CHECK(inv(elt(7, "1")) == elt(7, "1"));
  CHECK_THROWS_AS(inv(FieldElement(Field::of(5))), std::domain_error);
  std::mt19937_64 rng(3);
  for (int q : {5, 7, 9, 11, 15}) {
    const Field& f = Field::of(q);
    for (int k = 0; k < 40; ++k) {
      const auto x = random_element(f, rng);
      if (x.is_zero()) continue;
      CHECK(x * inv(x) == FieldElement(f, 1));
    }
  }
}

TEST_CASE("exact signs") {
  CHECK(sign(FieldElement(Field::of(5))) == 0);
  CHECK(sign(elt(5, "L - 1")) == 1);
  CHECK(sign(elt(5, "L - 2")) == -1);
  // 2cos(pi/7) = 1.80193773580483825...; rational neighbours closer than double spacing
  CHECK(sign(elt(7, "180193773580483825/100000000000000000 - L")) == -1);
  CHECK(sign(elt(7, "180193773580483826/100000000000000000 - L")) == 1);
  CHECK(sign(elt(7, "-180193773580483826/100000000000000000 + L")) == -1);
  CHECK(compare(elt(5, "L"), elt(5, "8/5")) == 1);
  CHECK(compare_abs(elt(5, "-L"), elt(5, "8/5")) == 1);
}

TEST_CASE("floor and certified enclosures") {
  CHECK(elt(5, "L").floor() == 1);
  CHECK(elt(5, "-L").floor() == -2);
  CHECK(elt(3, "7/2").floor() == 3);
  CHECK(elt(4, "100*L").floor() == 141);
  const Interval iv = elt(7, "L^2 - 3/7").to_interval(200);
  const double v = 4 * std::cos(M_PI / 7) * std::cos(M_PI / 7) - 3.0 / 7;
  CHECK(iv.lower() <= v + 1e-15);
  CHECK(iv.upper() >= v - 1e-15);
  CHECK(iv.width_exponent() < -198);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(17);
  for (int q : {4, 5, 7, 8, 9, 12}) {
    const Field& f = Field::of(q);
    for (int k = 0; k < 30; ++k) {
      const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a - a == FieldElement(f));
      CHECK(std::fabs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-9);
    }
  }
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(5);
  for (int q : {3, 5, 7, 13}) {
    const Field& f = Field::of(q);
    for (int k = 0; k < 30; ++k) {
      const auto x = random_element(f, rng);
      CHECK(FieldElement::parse(f, x.to_string()) == x);
    }
  }
  CHECK(elt(7, "1/2 + 3/4*L - L^2").to_string() == "1/2 + 3/4*L - L^2");
  CHECK(FieldElement(Field::of(5)).to_string() == "0");
  CHECK(elt(5, " - 2 * L + 1 ") == elt(5, "1-2*L"));
}

TEST_CASE("malformed field text reports a position") {
  const Field& f = Field::of(5);
  auto position_of = [&](const char* text) -> long {
    try {
      FieldElement::parse(f, text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("1/2*X") == 4);
  CHECK(position_of("1 + ") == 4);
  CHECK(position_of("3/0") == 2);
  CHECK(position_of("L L") == 2);
  CHECK(position_of("L^") == 2);
}

TEST_CASE("elements of different fields do not mix") {
  CHECK_THROWS_AS(elt(5, "L") + elt(7, "L"), std::invalid_argument);
}
