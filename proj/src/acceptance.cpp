#include "dedesym/acceptance.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dedesym/classical.hpp"
#include "dedesym/cocycle.hpp"
#include "dedesym/equidist.hpp"
#include "dedesym/hecke.hpp"

namespace dedesym {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Random SL2(Z) matrix with entries bounded by `bound`, from a random coprime bottom row.
IntegerMatrix random_bounded_matrix(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    const Integer c(dist(rng)), d(dist(rng));
    if (c == 0 || gcd(c, d) != 1) continue;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    // s d + t c = 1, so (s, -t; c, d) lies in SL2(Z); shift the top row to reduce a mod c
    Integer a = s, b = -t, k;
    mpz_fdiv_q(k.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    a -= k * c;
    b -= k * d;
    const IntegerMatrix m{a, b, c, d};
    if (abs(m.a) > bound || abs(m.b) > bound) continue;
    return m;
  }
}

// Random product of iota and translations in SL2(Z).
IntegerMatrix random_word_matrix(std::mt19937_64& rng, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> shift(-4, 4);
  IntegerMatrix m;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) m = m * (coin(rng) ? IntegerMatrix::iota() : IntegerMatrix::translation(shift(rng)));
  return m;
}

Word random_word(std::mt19937_64& rng, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> shift(-3, 3);
  Word w;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    if (coin(rng)) {
      w.append(Generator::Iota, 1);
    } else {
      const long s = shift(rng);
      if (s != 0) w.append(Generator::Tau, s);
    }
  }
  return w;
}

CriterionResult crit_oracle_equivalence() {
  long pairs = 0, mismatches = 0;
  for (long c = 1; c <= 500; ++c) {
    for (long a = 0; a < c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      const CoprimePair p{Integer(a), Integer(c)};
      ++pairs;
      if (dedekind_sum_fast(p) != dedekind_sum_naive(p)) ++mismatches;
    }
  }
  return {1, "fast Dedekind sum equals naive sum, c <= 500", mismatches == 0,
          fmt("%ld pairs, %ld mismatches", pairs, mismatches), 0};
}

CriterionResult crit_reciprocity() {
  long pairs = 0, nonzero = 0;
  for (long c = 2; c <= 300; ++c) {
    for (long a = 1; a < c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      ++pairs;
      if (reciprocity_residual(Integer(a), Integer(c)) != 0) ++nonzero;
    }
  }
  return {2, "reciprocity residual is 0 for 0 < a < c <= 300", nonzero == 0,
          fmt("%ld pairs, %ld nonzero residuals", pairs, nonzero), 0};
}

CriterionResult crit_eta_oracle() {
  std::mt19937_64 rng(20240603);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const IntegerMatrix m = random_bounded_matrix(rng, 1000);
    const double err = std::fabs(phi_via_eta(m, {0.0, 1.0}) - rademacher_phi(m).get_d());
    worst = std::max(worst, err);
  }
  return {3, "eta oracle matches phi on 100 random matrices (|entries| <= 1000)", worst < 1e-8,
          fmt("max |error| = %.3e (tolerance 1e-8)", worst), 0};
}

CriterionResult crit_cocycle() {
  std::mt19937_64 rng(7);
  long triples = 0, identity_failures = 0, range_failures = 0;
  const std::array<int, 3> qs{3, 5, 7};
  for (int q : qs) {
    const HeckeGroup group = make_group(q);
    for (int k = 0; k < 3334; ++k) {
      const GroupElement g = word_to_matrix(random_word(rng, 8), group).matrix;
      const GroupElement h = word_to_matrix(random_word(rng, 8), group).matrix;
      const GroupElement x = word_to_matrix(random_word(rng, 8), group).matrix;
      ++triples;
      try {
        const Rational lhs = omega(g, h).value() + omega(g * h, x).value();
        const Rational rhs = omega(g, h * x).value() + omega(h, x).value();
        if (lhs != rhs) ++identity_failures;
      } catch (const std::logic_error&) {
        ++range_failures;
      }
    }
  }
  long pairs = 0;
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const HeckeGroup group = make_group(qs[static_cast<size_t>(k % 3)]);
    const GroupElement g = word_to_matrix(random_word(rng, 8), group).matrix;
    const GroupElement h = word_to_matrix(random_word(rng, 8), group).matrix;
    const double exact = omega(g, h).to_double();
    for (auto z : {std::complex<double>(0, 1), std::complex<double>(1, 2)}) {
      worst = std::max(worst, std::fabs(omega_analytic(g, h, z) - exact));
    }
    ++pairs;
  }
  const bool ok = identity_failures == 0 && range_failures == 0 && worst < 1e-10;
  return {4, "omega: cocycle identity, range, analytic agreement", ok,
          fmt("%ld triples (%ld identity / %ld range failures); %ld pairs max |analytic - exact| = %.2e", triples,
              identity_failures, range_failures, pairs, worst),
          0};
}

CriterionResult crit_psi_consistency() {
  std::mt19937_64 rng(11);
  const Field& field = Field::of(3);
  long failures = 0;
  for (int k = 0; k < 10000; ++k) {
    const IntegerMatrix g = random_word_matrix(rng, 10);
    const IntegerMatrix h = random_word_matrix(rng, 10);
    const Rational defect = rademacher_psi(g * h) - rademacher_psi(g) - rademacher_psi(h);
    const QuarterInteger w = omega(GroupElement::from_integer(field, g), GroupElement::from_integer(field, h));
    if (defect != w.value()) ++failures;
  }
  return {5, "psi(gh) - psi(g) - psi(h) = omega(g,h) on SL2(Z)", failures == 0,
          fmt("10000 pairs, %ld failures", failures), 0};
}

CriterionResult crit_constants() {
  std::vector<std::string> bad;
  const Field& f3 = Field::of(3);
  const auto I = GroupElement::identity(f3);
  const auto minus_I = -I;
  const auto iota = GroupElement::from_integer(f3, IntegerMatrix::iota());
  // From omega alone: psi(I) = -omega(I,I); psi(-I) = (psi(I) - omega(-I,-I))/2;
  // psi(iota) = (psi(-I) - omega(iota,iota))/2.
  const Rational psi_I = -omega(I, I).value();
  const Rational psi_mI = (psi_I - omega(minus_I, minus_I).value()) / 2;
  const Rational psi_iota = (psi_mI - omega(iota, iota).value()) / 2;
  if (psi_I != 0) bad.push_back("psi(I) from omega");
  if (psi_mI != Rational(-1, 2)) bad.push_back("psi(-I) from omega");
  if (psi_iota != Rational(-1, 4)) bad.push_back("psi(iota) from omega");
  if (omega(minus_I, minus_I).value() != 1) bad.push_back("omega(-I,-I)");
  if (rademacher_psi(IntegerMatrix::iota()) != Rational(-1, 4)) bad.push_back("classical psi(iota)");
  if (rademacher_psi({-1, 0, 0, -1}) != Rational(-1, 2)) bad.push_back("classical psi(-I)");
  if (rademacher_psi({}) != 0) bad.push_back("classical psi(I)");
  for (int q = 3; q <= 7; ++q) {
    const HeckeGroup group = make_group(q);
    const Word iota_w = Word::parse("i");
    const Word minus_I_w = Word::parse("i,i");
    if (psi_word(iota_w, group).value != group.constant(Rational(-1, 4))) bad.push_back(fmt("psi(iota) q=%d", q));
    if (psi_word(minus_I_w, group).value != group.constant(Rational(-1, 2))) bad.push_back(fmt("psi(-I) q=%d", q));
    if (psi_word(Word(), group).value != group.constant(0)) bad.push_back(fmt("psi(I) q=%d", q));
    if (symbol_from_word(iota_w, group).value != group.constant(0)) bad.push_back(fmt("S(iota) q=%d", q));
    if (symbol_descent({group.lambda, group.constant(0)}, group).value != group.constant(0)) {
      bad.push_back(fmt("S_r(lambda,0) q=%d", q));
    }
  }
  std::string detail = bad.empty() ? "psi(iota)=-1/4, psi(-I)=-1/2, psi(I)=0, S([[iota]])=0, omega(-I,-I)=1" : "";
  for (const auto& b : bad) detail += b + " wrong; ";
  return {6, "constants psi(iota), psi(-I), psi(I), S([[iota]]), omega(-I,-I)", bad.empty(), detail, 0};
}

CriterionResult crit_cross_algorithm() {
  const std::array<long, 4> exps{-2, -1, 1, 2};
  long compared = 0, mismatches = 0;
  for (int q = 3; q <= 7; ++q) {
    const HeckeGroup group = make_group(q);
    for (const Word& w : reduced_words(12, exps)) {
      const NormalizedElement m = word_to_matrix(w, group);
      if (m.matrix.c().sign() == 0) continue;
      ++compared;
      if (!(symbol_from_word(w, group) == symbol_descent(row_of(m), group))) ++mismatches;
    }
  }
  return {7, "Algorithm A equals Algorithm B, words of length <= 12, q = 3..7", mismatches == 0,
          fmt("%ld words compared, %ld mismatches", compared, mismatches), 0};
}

CriterionResult crit_q3_bridge() {
  const HeckeGroup group = make_group(3);
  const Field& field = *group.field;
  long pairs = 0, symbol_failures = 0, descent_failures = 0, reciprocity_checked = 0, reciprocity_failures = 0;
  for (long c = 1; c <= 200; ++c) {
    for (long a = 0; a < c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      ++pairs;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(a).get_mpz_t(), Integer(c).get_mpz_t());
      // s a + t c = 1, so (a, -t; c, s) has determinant 1
      const IntegerMatrix m{Integer(a), Integer(-t), Integer(c), s};
      const auto word = membership(GroupElement::from_integer(field, m), group);
      const Rational expected = dedekind_sum_fast({Integer(a), Integer(c)});
      if (!word || symbol_from_word(*word, group).value != group.constant(expected)) {
        ++symbol_failures;
        continue;
      }
      if (symbol_descent({group.constant(Rational(c)), group.constant(Rational(s))}, group).value !=
          group.constant(expected)) {
        ++descent_failures;
      }
      if (s != 0) {
        ++reciprocity_checked;
        if (!reciprocity_residual_hecke(*word, group).is_zero()) ++reciprocity_failures;
      }
    }
  }
  const bool ok = symbol_failures == 0 && descent_failures == 0 && reciprocity_failures == 0;
  return {8, "q=3: symbol over (a,c) equals s(a,c), reciprocity residual 0, c <= 200", ok,
          fmt("%ld pairs (%ld word / %ld descent failures); reciprocity on %ld rows, %ld nonzero", pairs,
              symbol_failures, descent_failures, reciprocity_checked, reciprocity_failures),
          0};
}

CriterionResult crit_rationality() {
  const std::array<long, 4> exps{-2, -1, 1, 2};
  long words = 0, violations = 0, irrational = 0;
  for (int q : {5, 7}) {
    const HeckeGroup group = make_group(q);
    for (const Word& w : reduced_words(10, exps)) {
      const RationalityReport r = rationality_report(w, group);
      ++words;
      if (!r.higher_vanish) ++violations;
      if (!r.rational) ++irrational;
    }
  }
  return {9, "psi coordinates beyond {1, lambda} vanish, q = 5, 7", violations == 0,
          fmt("%ld words, %ld with higher coordinates, %ld with nonzero lambda coordinate", words, violations,
              irrational),
          0};
}

CriterionResult crit_equidistribution() {
  const CosetTable table = enumerate(3, 1500.0);
  std::string detail;
  bool ok = true;

  const std::array<double, 4> checkpoints{200, 400, 800, 1500};
  std::array<double, 4> disc{};
  for (size_t k = 0; k < checkpoints.size(); ++k) {
    disc[k] = discrepancy(table.mod1_values(table.count_up_to(checkpoints[k])));
  }
  bool monotone = true;
  for (size_t k = 1; k < disc.size(); ++k) monotone &= disc[k] <= 1.1 * disc[k - 1];
  ok &= disc[3] < 0.05 && monotone;
  detail += fmt("D*(200,400,800,1500) = %.4f %.4f %.4f %.4f; ", disc[0], disc[1], disc[2], disc[3]);

  std::vector<double> grid;
  for (double x = 100; x <= 1500; x += 100) grid.push_back(x);
  for (long n : {1L, 2L, 3L}) {
    const WeylSumSeries s = weyl_series(table, n, grid);
    ok &= s.fitted_exponent <= 1.6;
    detail += fmt("W_%ld exponent %.3f; ", n, s.fitted_exponent);
  }
  std::vector<std::pair<double, double>> counts;
  for (double x : grid) counts.emplace_back(x, static_cast<double>(table.count_up_to(x)));
  const GrowthFit fit = growth_fit(counts);
  ok &= std::fabs(fit.exponent - 2.0) <= 0.1;
  detail += fmt("|D_X| exponent %.3f, constant %.4f (V/4pi = %.4f, 3/pi^2 = %.4f)", fit.exponent, fit.constant,
                1.0 / 12.0, 3.0 / (M_PI * M_PI));
  return {10, "equidistribution mod 1 at q = 3, X = 1500", ok, detail, 0};
}

using Criterion = CriterionResult (*)();

struct SuiteEntry {
  const char* suite;
  Criterion run;
};

constexpr SuiteEntry kCriteria[] = {
    {"classical", crit_oracle_equivalence}, {"classical", crit_reciprocity}, {"classical", crit_eta_oracle},
    {"cocycle", crit_cocycle},              {"cocycle", crit_psi_consistency}, {"cocycle", crit_constants},
    {"hecke", crit_cross_algorithm},        {"hecke", crit_q3_bridge},      {"hecke", crit_rationality},
    {"equidist", crit_equidistribution},
};

}  // namespace

std::vector<std::string> suite_names() { return {"classical", "cocycle", "hecke", "equidist", "all"}; }

std::vector<CriterionResult> run_suite(std::string_view suite,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CriterionResult> results;
  for (const auto& entry : kCriteria) {
    if (suite != "all" && suite != entry.suite) continue;
    const auto start = Clock::now();
    CriterionResult r;
    try {
      r = entry.run();
    } catch (const std::exception& e) {
      r = {0, "criterion raised", false, e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  return fmt("[%s] %2d %-70s %7.2fs  %s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
             r.detail.c_str());
}

}  // namespace dedesym
