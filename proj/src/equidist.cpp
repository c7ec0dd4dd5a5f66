#include "dedesym/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <thread>

namespace dedesym {

size_t CosetTable::count_up_to(double x) const {
  // entries are sorted by c
  size_t lo = 0, hi = entries.size();
  while (lo < hi) {
    const size_t mid = (lo + hi) / 2;
    if (entries[mid].c.to_double() <= x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<double> CosetTable::mod1_values(size_t prefix) const {
  std::vector<double> out;
  out.reserve(prefix);
  for (size_t i = 0; i < prefix && i < entries.size(); ++i) out.push_back(entries[i].symbol_mod1);
  return out;
}

double scaled_mod1(const FieldElement& symbol, long n, mpfr_prec_t bits) {
  FieldElement x = symbol * Rational(n);
  x -= FieldElement(x.field(), Rational(x.floor()));
  double v = x.to_interval(bits).midpoint();
  // the enclosure midpoint of a value just below 1 can round up to 1
  if (v >= 1.0) v = std::nextafter(1.0, 0.0);
  if (v < 0.0) v = 0.0;
  return v;
}

namespace {

CosetTable sieve_q3(double X, const EnumerateOptions& options) {
  const Field& field = Field::of(3);
  const long cmax = static_cast<long>(std::floor(X));
  std::vector<std::vector<CosetEntry>> by_c(static_cast<size_t>(std::max(cmax, 0L)) + 1);
  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = static_cast<unsigned>(std::min<long>(workers, std::max(cmax, 1L)));
  auto work = [&](unsigned shard) {
    for (long c = 1 + shard; c <= cmax; c += workers) {
      auto& bucket = by_c[static_cast<size_t>(c)];
      for (long a = 0; a < c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        FieldElement s(field, dedekind_sum_fast({Integer(a), Integer(c)}));
        const double m1 = scaled_mod1(s, 1, options.bits);
        bucket.push_back({FieldElement(field, Rational(a)), FieldElement(field, Rational(c)), std::move(s), m1});
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  CosetTable table;
  table.q = 3;
  table.X = X;
  for (auto& bucket : by_c) {
    for (auto& e : bucket) table.entries.push_back(std::move(e));
  }
  return table;
}

struct ClassKey {
  FieldElement c;
  FieldElement a;
};

struct ClassKeyLess {
  bool operator()(const ClassKey& x, const ClassKey& y) const {
    if (coords_less(x.c, y.c)) return true;
    if (coords_less(y.c, x.c)) return false;
    return coords_less(x.a, y.a);
  }
};

// Column normal form: c > 0 and 0 <= a < c.
ClassKey normal_form(const GroupElement& m) {
  FieldElement c = m.c();
  FieldElement a = m.a();
  if (c.sign() < 0) {
    c = -c;
    a = -a;
  }
  const Integer k = (a * c.inverse()).floor();
  a -= c * Rational(k);
  return {std::move(c), std::move(a)};
}

}  // namespace

CosetTable enumerate_by_expansion(int q, double X, const EnumerateOptions& options) {
  if (!(X >= 1.0)) throw std::invalid_argument("enumerate: X must be >= 1");
  const HeckeGroup group = make_group(q);
  const Field& field = *group.field;
  const FieldElement x_bound(field, Rational(X));
  const double lam = group.lambda.to_double();

  struct Node {
    GroupElement m;
    FieldElement symbol;
    size_t depth;
  };
  std::map<ClassKey, FieldElement, ClassKeyLess> visited;
  std::deque<Node> frontier;
  CosetTable table;
  table.q = q;
  table.X = X;

  const GroupElement& root = group.iota_normalized;
  if (compare(root.c(), x_bound) <= 0) {
    visited.emplace(normal_form(root), FieldElement(field));
    frontier.push_back({root, FieldElement(field), 0});
  }
  const FieldElement one = group.constant(1);
  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    const FieldElement& c = node.m.c();
    const FieldElement& d = node.m.d();
    // children: m tau'^n iota' with |lambda (d + n c)| <= X and d + n c != 0
    const double cd = c.to_double(), dd = d.to_double();
    const double reach = X / lam;
    double lo = (-reach - dd) / cd, hi = (reach - dd) / cd;
    if (lo > hi) std::swap(lo, hi);
    const long n_lo = static_cast<long>(std::floor(lo)) - 1;
    const long n_hi = static_cast<long>(std::ceil(hi)) + 1;
    for (long n = n_lo; n <= n_hi; ++n) {
      const FieldElement shifted = d + c * Rational(n);
      if (shifted.sign() == 0) continue;
      if (compare_abs(group.lambda * shifted, x_bound) > 0) continue;
      GroupElement child = node.m * GroupElement(one, group.constant(n), group.constant(0), one) * group.iota_normalized;
      ClassKey key = normal_form(child);
      if (visited.count(key) != 0) continue;
      if (node.depth + 1 > options.max_depth) {
        table.complete = false;
        continue;
      }
      FieldElement symbol = node.symbol + swap_increment({child.c(), child.d()}, group);
      visited.emplace(std::move(key), symbol);
      frontier.push_back({std::move(child), std::move(symbol), node.depth + 1});
    }
  }

  for (auto& [key, symbol] : visited) {
    const double m1 = scaled_mod1(symbol, 1, options.bits);
    table.entries.push_back({key.a, key.c, symbol, m1});
  }
  std::sort(table.entries.begin(), table.entries.end(), [](const CosetEntry& x, const CosetEntry& y) {
    const int cc = compare(x.c, y.c);
    if (cc != 0) return cc < 0;
    return compare(x.a, y.a) < 0;
  });
  return table;
}

CosetTable enumerate(int q, double X, const EnumerateOptions& options) {
  if (!(X >= 1.0)) throw std::invalid_argument("enumerate: X must be >= 1");
  if (q == 3) return sieve_q3(X, options);
  return enumerate_by_expansion(q, X, options);
}

std::complex<double> weyl_sum(const CosetTable& table, long n, mpfr_prec_t bits) {
  if (n == 0) return {static_cast<double>(table.size()), 0.0};
  std::complex<double> sum(0.0, 0.0);
  for (const auto& e : table.entries) sum += std::polar(1.0, 2.0 * std::numbers::pi * scaled_mod1(e.symbol, n, bits));
  return sum;
}

WeylSumSeries weyl_series(const CosetTable& table, long n, std::span<const double> checkpoints, mpfr_prec_t bits) {
  WeylSumSeries series;
  series.q = table.q;
  series.n = n;
  std::complex<double> sum(0.0, 0.0);
  size_t i = 0;
  for (double x : checkpoints) {
    while (i < table.entries.size() && table.entries[i].c.to_double() <= x) {
      const auto& e = table.entries[i];
      sum += n == 0 ? std::complex<double>(1.0, 0.0)
                    : std::polar(1.0, 2.0 * std::numbers::pi * scaled_mod1(e.symbol, n, bits));
      ++i;
    }
    series.values.emplace_back(x, sum);
  }
  std::vector<std::pair<double, double>> samples;
  for (const auto& [x, w] : series.values) {
    if (x > 0 && std::abs(w) > 0) samples.emplace_back(x, std::abs(w));
  }
  series.fitted_exponent =
      samples.size() >= 5 ? growth_fit(samples).exponent : std::numeric_limits<double>::quiet_NaN();
  return series;
}

GrowthFit growth_fit(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 5) throw std::invalid_argument("growth_fit needs at least 5 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, v] : samples) {
    if (!(x > 0) || !(v > 0)) throw std::invalid_argument("growth_fit needs positive samples");
    const double lx = std::log(x), ly = std::log(v);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(samples.size());
  const double denom = n * sxx - sx * sx;
  if (std::fabs(denom) < 1e-12) throw std::invalid_argument("growth_fit: degenerate sample abscissae");
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  return {slope, std::exp(intercept)};
}

double discrepancy(std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy of an empty point set");
  std::vector<double> xs(points.begin(), points.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double k = static_cast<double>(i);
    d = std::max({d, (k + 1) / n - xs[i], xs[i] - k / n});
  }
  return d;
}

double discrepancy(const CosetTable& table) {
  const auto values = table.mod1_values(table.size());
  return discrepancy(values);
}

void export_csv(const CosetTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "q,X,a,c,symbol_exact,symbol_mod1\n";
  char buf[64];
  for (const auto& e : table.entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.symbol_mod1);
    out << table.q << ',' << table.X << ',' << e.a.to_string() << ',' << e.c.to_string() << ','
        << e.symbol.to_string() << ',' << buf << '\n';
  }
}

void export_csv(std::span<const WeylSumSeries> series, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "q,n,X,re,im,abs\n";
  char buf[128];
  for (const auto& s : series) {
    for (const auto& [x, w] : s.values) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", w.real(), w.imag(), std::abs(w));
      out << s.q << ',' << s.n << ',' << x << ',' << buf << '\n';
    }
  }
}

}  // namespace dedesym
