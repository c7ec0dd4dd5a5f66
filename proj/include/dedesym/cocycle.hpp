#pragma once

#include <complex>

#include "dedesym/group.hpp"
#include "dedesym/word.hpp"

namespace dedesym {

/// Multiple of 1/4 produced by the cocycle; construction rejects anything
/// outside {-1, -1/2, 0, 1/2, 1}.
class QuarterInteger {
 public:
  /// Throws std::logic_error when quarters is not in {-4, -2, 0, 2, 4}.
  explicit QuarterInteger(int quarters);

  int quarters() const { return quarters_; }
  Rational value() const { return ratio(quarters_, 4); }
  double to_double() const { return quarters_ / 4.0; }
  std::string to_string() const;
  friend bool operator==(const QuarterInteger&, const QuarterInteger&) = default;

 private:
  int quarters_;
};

/// c if c != 0, else -d.
FieldElement c_of_minus_d(const GroupElement& g);

/// omega(g,h) = 1/4 { s(g) + s(h) - s(gh) - s(g)s(h)s(gh) }, s = sign(c(-d)).
QuarterInteger omega(const GroupElement& g, const GroupElement& h);
/// Same formula from precomputed signs of c(-d).
QuarterInteger omega_from_signs(int sg, int sh, int sgh);

/// (log j(g,hz) + log j(h,z) - log j(gh,z)) / (2 pi i) with principal logs, j(g,z) = cz + d.
/// Returns the real part; the imaginary part vanishes up to rounding.
double omega_analytic(const GroupElement& g, const GroupElement& h, std::complex<double> z = {0.0, 1.0});

/// Generator matrices with their psi values. `tau` must be a translation
/// (1, t; 0, 1); then psi(tau^n) = n psi(tau) because omega vanishes on pairs
/// of translations.
struct GeneratorData {
  GroupElement iota;
  GroupElement tau;
  FieldElement psi_iota;
  FieldElement psi_tau;
};

struct Accumulation {
  GroupElement product;
  FieldElement psi;
};

/// Left-to-right accumulation psi(p g) = psi(p) + psi(g) + omega(p, g), starting from psi(I) = 0.
Accumulation accumulate_word(const Word& word, const GeneratorData& gens);

inline FieldElement psi_accumulate(const Word& word, const GeneratorData& gens) {
  return accumulate_word(word, gens).psi;
}

}  // namespace dedesym
