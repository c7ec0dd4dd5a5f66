#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dedesym/cocycle.hpp"
#include "dedesym/group.hpp"
#include "dedesym/word.hpp"

namespace dedesym {

/// The Hecke triangle group H_q generated by iota = (0,-1;1,0) and the
/// translation tau_q = (1,lambda_q;0,1). Normalized coordinates conjugate by
/// sigma = diag(sqrt(lambda), 1/sqrt(lambda)), turning tau_q into the unit
/// translation: (a, b; c, d) -> (a, b/lambda; c lambda, d).
struct HeckeGroup {
  int q;
  const Field* field;
  FieldElement lambda;
  FieldElement lambda_inverse;
  /// V/(4 pi) = (q-2)/(4q) for covolume V = pi (1 - 2/q).
  Rational covolume_over_4pi;
  /// sqrt(lambda), the diagonal entry of sigma.
  double sigma_scale;
  GroupElement iota;
  GroupElement tau;
  GroupElement iota_normalized;
  GroupElement tau_normalized;
  /// Normalized generators with psi(iota') = -1/4 and psi(tau') = (q-2)/(4q).
  GeneratorData generators;

  FieldElement constant(const Rational& x) const { return FieldElement(*field, x); }
};

/// Throws std::invalid_argument for q < 3.
HeckeGroup make_group(int q);

/// Element in normalized coordinates.
struct NormalizedElement {
  GroupElement matrix;
};

/// sigma^-1 g sigma.
NormalizedElement normalize(const GroupElement& g, const HeckeGroup& group);
GroupElement denormalize(const NormalizedElement& g, const HeckeGroup& group);

NormalizedElement word_to_matrix(const Word& w, const HeckeGroup& group);

/// Exact value in Q(lambda) for psi or the Dedekind symbol.
struct SymbolValue {
  FieldElement value;

  std::span<const Rational> coords() const { return value.coords(); }
  double approx() const { return value.to_double(); }
  std::string to_string() const { return value.to_string(); }
  friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

/// Raised when a symbol is requested for the trivial double coset (c = 0).
class TrivialDoubleCoset : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when Rosen reduction fails: iteration cap, or a terminal row that is
/// not of iota type. Either means the input was not from a group element.
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// psi of the word product, accumulated through the cocycle.
SymbolValue psi_word(const Word& w, const HeckeGroup& group);

/// (V/4pi)(a+d)/c - phi with phi = psi + sign(c)/4, for a normalized element with known psi.
SymbolValue symbol_of(const NormalizedElement& m, const FieldElement& psi, const HeckeGroup& group);

/// Algorithm A: accumulate psi along the word, then apply the symbol formula.
SymbolValue symbol_from_word(const Word& w, const HeckeGroup& group);

/// Bottom row (c, d) of a normalized element; names its double coset.
struct DoubleCosetRow {
  FieldElement c;
  FieldElement d;
  std::string to_string() const { return c.to_string() + ";" + d.to_string(); }
  friend bool operator==(const DoubleCosetRow&, const DoubleCosetRow&) = default;
};

DoubleCosetRow row_of(const NormalizedElement& m);
/// Text `<c>;<d>` with field literals.
DoubleCosetRow parse_row(const HeckeGroup& group, std::string_view text);
/// Row after right multiplication by iota': (c, d) -> (lambda d, -c/lambda).
DoubleCosetRow swap_row(const DoubleCosetRow& row, const HeckeGroup& group);

struct ReductionStep {
  enum class Kind { Translate, Swap };
  Kind kind;
  /// Translation amount n in d <- d + n c; zero for swaps.
  Integer shift;
  DoubleCosetRow before;
  DoubleCosetRow after;
};

struct ReductionTrace {
  DoubleCosetRow start;
  std::vector<ReductionStep> steps;
  DoubleCosetRow terminal;
  size_t swap_count() const;
};

/// Integer n minimizing the embedded |d + n c|; ties go to the smaller |n|.
Integer nearest_shift(const FieldElement& d, const FieldElement& c);

/// Alternates nearest translations with iota'-swaps until the d-part is 0.
/// Zero translations are not recorded.
ReductionTrace rosen_reduce(const DoubleCosetRow& row, const HeckeGroup& group, size_t iteration_cap = 10000);

/// Reciprocity increment across one swap of row (c, d), c d != 0:
/// (V/4pi)(c/(lambda^2 d) + 1/(c d) + d/c) - sign(c d)/4.
FieldElement swap_increment(const DoubleCosetRow& row, const HeckeGroup& group);

/// Algorithm B: replay the reduction trace, adding the reciprocity increment
/// at every swap; terminal rows (+-lambda, 0) carry symbol 0.
SymbolValue symbol_descent(const DoubleCosetRow& row, const HeckeGroup& group);

/// S(g) + S(h) - S(gh) minus the three-term right-hand side; symbols by Algorithm A.
/// Throws TrivialDoubleCoset when any of c_g, c_h, c_gh vanishes.
FieldElement three_term_residual(const Word& g, const Word& h, const HeckeGroup& group);

/// S_r(c,d) - S_r(lambda d, -c/lambda) - [(V/4pi)(c/(lambda^2 d) + 1/(cd) + d/c) - sign(cd)/4]
/// for the row of g; both symbols by Algorithm A. At q = 3 this is the
/// reciprocity law for rows (c, d) -> (d, -c).
FieldElement reciprocity_residual_hecke(const Word& g, const HeckeGroup& group);

/// Word w with word_to_matrix(w) equal to the normalized m, or nullopt when m
/// is not in H_q. `m` is given in the original (unnormalized) coordinates.
/// Throws ReductionError when the iteration cap is hit.
std::optional<Word> membership(const GroupElement& m, const HeckeGroup& group, size_t iteration_cap = 10000);

/// A word whose normalized matrix has bottom row `row`, read off the inverted
/// reduction trace. Throws ReductionError when the row does not reduce.
Word word_for_row(const DoubleCosetRow& row, const HeckeGroup& group, size_t iteration_cap = 10000);

/// All alternating words of 1..max_length letters over iota and tau^k, k in
/// `tau_exponents`; iota appears with exponent 1 only.
std::vector<Word> reduced_words(size_t max_length, std::span<const long> tau_exponents);

struct RationalityReport {
  /// Power-basis coordinates of psi(w).
  std::vector<Rational> psi_coords;
  /// True when every coordinate of index >= 2 vanishes.
  bool higher_vanish;
  /// psi = r + s lambda.
  Rational r;
  Rational s;
  /// True when psi is rational (s = 0 as well).
  bool rational;
};

RationalityReport rationality_report(const Word& w, const HeckeGroup& group);

}  // namespace dedesym
