#include "dedesym/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dedesym {

QuarterInteger::QuarterInteger(int quarters) : quarters_(quarters) {
  if (quarters != -4 && quarters != -2 && quarters != 0 && quarters != 2 && quarters != 4) {
    throw std::logic_error("cocycle value " + std::to_string(quarters) + "/4 outside {-1,-1/2,0,1/2,1}");
  }
}

std::string QuarterInteger::to_string() const { return dedesym::to_string(value()); }

FieldElement c_of_minus_d(const GroupElement& g) { return g.c().sign() != 0 ? g.c() : -g.d(); }

namespace {

int sign_c_of_minus_d(const GroupElement& g) {
  const int sc = g.c().sign();
  return sc != 0 ? sc : -g.d().sign();
}

}  // namespace

QuarterInteger omega_from_signs(int sg, int sh, int sgh) { return QuarterInteger(sg + sh - sgh - sg * sh * sgh); }

QuarterInteger omega(const GroupElement& g, const GroupElement& h) {
  if (&g.field() != &h.field()) throw std::invalid_argument("omega: elements from different fields");
  return omega_from_signs(sign_c_of_minus_d(g), sign_c_of_minus_d(h), sign_c_of_minus_d(g * h));
}

double omega_analytic(const GroupElement& g, const GroupElement& h, std::complex<double> z) {
  using C = std::complex<double>;
  if (!(z.imag() > 0)) throw std::invalid_argument("omega_analytic needs Im(z) > 0");
  const GroupElement gh = g * h;
  auto j = [](const GroupElement& m, C w) { return m.c().to_double() * w + m.d().to_double(); };
  const C hz = (h.a().to_double() * z + h.b().to_double()) / j(h, z);
  const C total = std::log(j(g, hz)) + std::log(j(h, z)) - std::log(j(gh, z));
  return (total / C(0.0, 2.0 * std::numbers::pi)).real();
}

Accumulation accumulate_word(const Word& word, const GeneratorData& gens) {
  const Field& field = gens.iota.field();
  if (gens.tau.c().sign() != 0 || gens.tau.a() != FieldElement(field, Rational(1)) ||
      gens.tau.d() != FieldElement(field, Rational(1))) {
    throw std::invalid_argument("accumulate_word: tau generator must be a translation");
  }
  GroupElement product = GroupElement::identity(field);
  FieldElement psi(field);
  int s_product = -1;  // c(-d) of I is -1
  const int s_iota = sign_c_of_minus_d(gens.iota);
  for (const Letter& letter : word.letters()) {
    if (letter.generator == Generator::Iota) {
      const long reps = ((letter.exponent % 4) + 4) % 4;
      for (long k = 0; k < reps; ++k) {
        GroupElement next = product * gens.iota;
        const int s_next = sign_c_of_minus_d(next);
        psi += gens.psi_iota;
        psi += FieldElement(field, omega_from_signs(s_product, s_iota, s_next).value());
        product = std::move(next);
        s_product = s_next;
      }
    } else {
      const Rational n(letter.exponent);
      const GroupElement step(FieldElement(field, Rational(1)), gens.tau.b() * n, FieldElement(field),
                              FieldElement(field, Rational(1)));
      GroupElement next = product * step;
      const int s_next = sign_c_of_minus_d(next);
      psi += gens.psi_tau * n;
      psi += FieldElement(field, omega_from_signs(s_product, -1, s_next).value());
      product = std::move(next);
      s_product = s_next;
    }
  }
  return {std::move(product), std::move(psi)};
}

}  // namespace dedesym
