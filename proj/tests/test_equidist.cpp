#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>

#include "dedesym/classical.hpp"
#include "dedesym/equidist.hpp"

using namespace dedesym;

TEST_CASE("q = 3 tables count coprime pairs") {
  CHECK(enumerate(3, 1).size() == 1);
  const CosetTable t = enumerate(3, 10);
  long expect = 0;
  for (long c = 1; c <= 10; ++c) expect += totient(c);
  CHECK(expect == 32);
  CHECK(t.size() == 32);
  CHECK(t.complete);
  CHECK(t.entries.front().c.to_string() == "1");
  CHECK(t.entries.front().a.to_string() == "0");
  size_t previous = 0;
  for (double x = 0; x <= 10; x += 0.5) {
    CHECK(t.count_up_to(x) >= previous);
    previous = t.count_up_to(x);
  }
}

TEST_CASE("expansion agrees with the coprime sieve at q = 3") {
  const CosetTable sieve = enumerate(3, 60);
  const CosetTable bfs = enumerate_by_expansion(3, 60);
  REQUIRE(sieve.size() == bfs.size());
  for (size_t k = 0; k < sieve.size(); ++k) {
    CHECK(sieve.entries[k].a == bfs.entries[k].a);
    CHECK(sieve.entries[k].c == bfs.entries[k].c);
    CHECK(sieve.entries[k].symbol == bfs.entries[k].symbol);
  }
}

TEST_CASE("worker count does not change the table") {
  EnumerateOptions one, four;
  one.workers = 1;
  four.workers = 4;
  const CosetTable a = enumerate(3, 150, one), b = enumerate(3, 150, four);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) CHECK(a.entries[k].symbol == b.entries[k].symbol);
}

TEST_CASE("smallest classes for q = 5") {
  const HeckeGroup g = make_group(5);
  const CosetTable t = enumerate(5, g.lambda.to_double());
  REQUIRE(t.size() == 1);
  CHECK(t.entries[0].c == g.lambda);
  CHECK(t.entries[0].symbol.is_zero());
}

TEST_CASE("expanded symbols match the word algorithm") {
  for (int q : {4, 5, 7}) {
    const HeckeGroup g = make_group(q);
    const CosetTable t = enumerate(q, 12);
    CHECK(t.complete);
    for (const auto& e : t.entries) {
      // (c, -a) is the bottom row of -g^-1, whose symbol is -S(g)
      const DoubleCosetRow row{e.c, -e.a};
      const Word w = word_for_row(row, g);
      CHECK(symbol_from_word(w, g).value == -e.symbol);
    }
  }
}

TEST_CASE("depth guard marks the table incomplete") {
  EnumerateOptions opts;
  opts.max_depth = 1;
  CHECK_FALSE(enumerate(5, 30, opts).complete);
}

TEST_CASE("mod 1 values are stable across precisions") {
  const CosetTable t = enumerate(5, 60);
  for (const auto& e : t.entries) {
    for (long n : {1L, 2L, 7L}) {
      const double lo = scaled_mod1(e.symbol, n, 128), hi = scaled_mod1(e.symbol, n, 256);
      CHECK(std::fabs(lo - hi) < 1e-9);
      CHECK(lo >= 0.0);
      CHECK(lo < 1.0);
    }
    CHECK(e.symbol_mod1 == scaled_mod1(e.symbol, 1));
  }
}

TEST_CASE("Weyl sums") {
  const CosetTable t = enumerate(3, 10);
  CHECK(weyl_sum(t, 0) == std::complex<double>(32.0, 0.0));
  std::complex<double> direct = 0;
  for (long c = 1; c <= 10; ++c) {
    for (long a = 0; a < c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      direct += std::polar(1.0, 2 * std::numbers::pi * dedekind_sum_fast({a, c}).get_d());
    }
  }
  CHECK(std::abs(weyl_sum(t, 1) - direct) < 1e-12);
  const CosetTable t5 = enumerate(5, 40);
  for (long n : {1L, 2L, 3L}) CHECK(std::abs(weyl_sum(t5, -n) - std::conj(weyl_sum(t5, n))) < 1e-9);
  const std::array<double, 3> cps{2, 5, 10};
  const WeylSumSeries s = weyl_series(t, 1, cps);
  REQUIRE(s.values.size() == 3);
  CHECK(std::abs(s.values[2].second - direct) < 1e-12);
  CHECK(std::isnan(s.fitted_exponent));
}

TEST_CASE("discrepancy") {
  const std::array<double, 1> zero{0.0};
  CHECK(discrepancy(zero) == doctest::Approx(1.0));
  const std::array<double, 2> two{0.25, 0.75};
  CHECK(discrepancy(two) == doctest::Approx(0.25));
  std::vector<double> grid;
  for (int k = 0; k < 50; ++k) grid.push_back(k / 50.0);
  CHECK(discrepancy(grid) == doctest::Approx(1.0 / 50));
  CHECK_THROWS_AS(discrepancy(std::span<const double>()), std::invalid_argument);
}

TEST_CASE("growth fit") {
  std::vector<std::pair<double, double>> pts;
  for (double x = 10; x <= 100; x += 10) pts.emplace_back(x, 0.3 * std::pow(x, 1.7));
  const GrowthFit f = growth_fit(pts);
  CHECK(f.exponent == doctest::Approx(1.7));
  CHECK(f.constant == doctest::Approx(0.3));
  pts.resize(3);
  CHECK_THROWS_AS(growth_fit(pts), std::invalid_argument);
}

TEST_CASE("csv export") {
  const auto dir = std::filesystem::temp_directory_path();
  const CosetTable t = enumerate(3, 5);
  export_csv(t, dir / "dedesym_table.csv");
  std::ifstream in(dir / "dedesym_table.csv");
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "q,X,a,c,symbol_exact,symbol_mod1");
  CHECK(first.rfind("3,5,0,1,0,", 0) == 0);
  size_t lines = 1;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == t.size());
}
