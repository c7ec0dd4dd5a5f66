#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <vector>

#include "dedesym/hecke.hpp"

namespace dedesym {

struct CosetEntry {
  FieldElement a;
  FieldElement c;
  FieldElement symbol;
  /// symbol - floor(symbol), embedded through a certified enclosure.
  double symbol_mod1;
};

/// Double cosets with 0 <= a < c <= X (normalized coordinates), sorted by
/// embedded c, then a. Each double coset appears once.
struct CosetTable {
  int q = 3;
  double X = 0;
  std::vector<CosetEntry> entries;
  /// False when the depth guard stopped the expansion early.
  bool complete = true;

  size_t size() const { return entries.size(); }
  /// Number of entries with embedded c <= x.
  size_t count_up_to(double x) const;
  std::vector<double> mod1_values(size_t prefix) const;
};

struct EnumerateOptions {
  /// Precision of the embedding used for symbol mod 1.
  mpfr_prec_t bits = 128;
  /// Guard on the number of swaps from the iota class, q > 3 only.
  size_t max_depth = 256;
  /// Worker threads for the q = 3 sieve; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// q = 3: coprime sieve with symbols s(a, c). q > 3: expansion from the iota
/// class by translations and iota-swaps, pruned at |c| > X, deduplicated by
/// the column normal form (a mod c, c > 0).
CosetTable enumerate(int q, double X, const EnumerateOptions& options = {});

/// Enumeration by expansion for any q, including q = 3.
CosetTable enumerate_by_expansion(int q, double X, const EnumerateOptions& options = {});

/// (n * symbol) mod 1 as a double, reduced exactly in the field before embedding.
double scaled_mod1(const FieldElement& symbol, long n, mpfr_prec_t bits = 128);

/// sum over the table of e(n S); n = 0 returns the table size.
std::complex<double> weyl_sum(const CosetTable& table, long n, mpfr_prec_t bits = 128);

struct WeylSumSeries {
  int q = 3;
  long n = 1;
  /// (X, W_n(X)) at each checkpoint.
  std::vector<std::pair<double, std::complex<double>>> values;
  /// Log-log slope of |W_n|; NaN when fewer than 5 checkpoints have W_n != 0.
  double fitted_exponent = 0;
};

/// W_n at each checkpoint (ascending, all <= table.X) in one pass over the table.
WeylSumSeries weyl_series(const CosetTable& table, long n, std::span<const double> checkpoints,
                          mpfr_prec_t bits = 128);

struct GrowthFit {
  double exponent;
  double constant;
};

/// Least-squares fit of log(value) = log(constant) + exponent log(X).
/// Needs at least 5 samples with X > 0 and value > 0.
GrowthFit growth_fit(std::span<const std::pair<double, double>> samples);

/// Star discrepancy of points in [0, 1) against Lebesgue measure.
double discrepancy(std::span<const double> points);
double discrepancy(const CosetTable& table);

/// Columns q,X,a,c,symbol_exact,symbol_mod1.
void export_csv(const CosetTable& table, const std::filesystem::path& path);
/// Columns q,n,X,re,im,abs.
void export_csv(std::span<const WeylSumSeries> series, const std::filesystem::path& path);

}  // namespace dedesym
