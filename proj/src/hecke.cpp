#include "dedesym/hecke.hpp"

#include <cmath>
#include <numbers>

namespace dedesym {

HeckeGroup make_group(int q) {
  if (q < 3) throw std::invalid_argument("make_group: q must be >= 3, got " + std::to_string(q));
  const Field& field = Field::of(q);
  const FieldElement zero(field), one(field, Rational(1));
  const FieldElement lam = FieldElement::lambda(field);
  const FieldElement lam_inv = lam.inverse();
  const Rational v = ratio(q - 2, 4 * q);
  GroupElement iota(zero, -one, one, zero);
  GroupElement tau(one, lam, zero, one);
  GroupElement iota_n(zero, -lam_inv, lam, zero);
  GroupElement tau_n(one, one, zero, one);
  GeneratorData gens{iota_n, tau_n, FieldElement(field, Rational(-1, 4)), FieldElement(field, v)};
  return HeckeGroup{q,
                    &field,
                    lam,
                    lam_inv,
                    v,
                    std::sqrt(2.0 * std::cos(std::numbers::pi / q)),
                    std::move(iota),
                    std::move(tau),
                    std::move(iota_n),
                    std::move(tau_n),
                    std::move(gens)};
}

NormalizedElement normalize(const GroupElement& g, const HeckeGroup& group) {
  return {GroupElement(g.a(), g.b() * group.lambda_inverse, g.c() * group.lambda, g.d())};
}

GroupElement denormalize(const NormalizedElement& g, const HeckeGroup& group) {
  const GroupElement& m = g.matrix;
  return {m.a(), m.b() * group.lambda, m.c() * group.lambda_inverse, m.d()};
}

NormalizedElement word_to_matrix(const Word& w, const HeckeGroup& group) {
  GroupElement m = GroupElement::identity(*group.field);
  for (const Letter& l : w.letters()) {
    if (l.generator == Generator::Iota) {
      const long reps = ((l.exponent % 4) + 4) % 4;
      for (long k = 0; k < reps; ++k) m = m * group.iota_normalized;
    } else {
      const FieldElement one = group.constant(1);
      m = m * GroupElement(one, group.constant(l.exponent), group.constant(0), one);
    }
  }
  return {std::move(m)};
}

SymbolValue psi_word(const Word& w, const HeckeGroup& group) { return {psi_accumulate(w, group.generators)}; }

SymbolValue symbol_of(const NormalizedElement& m, const FieldElement& psi, const HeckeGroup& group) {
  const GroupElement& g = m.matrix;
  const int sc = g.c().sign();
  if (sc == 0) throw TrivialDoubleCoset("symbol undefined on the trivial double coset (c = 0)");
  FieldElement value = (g.a() + g.d()) * g.c().inverse() * group.covolume_over_4pi;
  value -= psi;
  value -= group.constant(ratio(sc, 4));
  return {std::move(value)};
}

SymbolValue symbol_from_word(const Word& w, const HeckeGroup& group) {
  Accumulation acc = accumulate_word(w, group.generators);
  return symbol_of({std::move(acc.product)}, acc.psi, group);
}

DoubleCosetRow row_of(const NormalizedElement& m) { return {m.matrix.c(), m.matrix.d()}; }

DoubleCosetRow parse_row(const HeckeGroup& group, std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError("row must be '<c>;<d>'", semi == std::string_view::npos ? text.size() : semi);
  }
  FieldElement c = FieldElement::parse(*group.field, text.substr(0, semi));
  try {
    return {std::move(c), FieldElement::parse(*group.field, text.substr(semi + 1))};
  } catch (const ParseError& e) {
    throw e.shifted(semi + 1);
  }
}

DoubleCosetRow swap_row(const DoubleCosetRow& row, const HeckeGroup& group) {
  return {group.lambda * row.d, -(row.c * group.lambda_inverse)};
}

size_t ReductionTrace::swap_count() const {
  size_t n = 0;
  for (const auto& s : steps) n += s.kind == ReductionStep::Kind::Swap;
  return n;
}

Integer nearest_shift(const FieldElement& d, const FieldElement& c) {
  if (c.sign() == 0) throw std::domain_error("nearest_shift: c = 0");
  const Field& field = c.field();
  if (field.degree() == 1) {
    const Rational t = -d.coord(0) / c.coord(0);
    const Integer n0 = floor(t);
    const int half = cmp(t - Rational(n0), Rational(1, 2));
    if (half < 0) return n0;
    if (half > 0) return n0 + 1;
    return abs(n0) <= abs(Integer(n0 + 1)) ? n0 : Integer(n0 + 1);
  }
  // Double-precision estimate when the ratio is certifiably away from a half-integer.
  const double dv = d.to_double(), cv = c.to_double();
  if (std::isfinite(dv) && std::isfinite(cv) && std::fabs(cv) > 0) {
    const double t = -dv / cv;
    if (std::fabs(t) < 1e12) {
      const double shifted = t + 0.5;
      const double k = std::floor(shifted);
      const double margin = 1e-9 * (1.0 + std::fabs(t));
      if (shifted - k > margin && (k + 1) - shifted > margin) {
        // Confirm exactly: |d + k c| < |d + (k-1) c| and < |d + (k+1) c| is
        // implied by t in (k - 1/2, k + 1/2); verify the bracketing signs.
        const Integer n(k);
        const FieldElement lo = d + c * Rational(Integer(2 * n - 1), 2);
        const FieldElement hi = d + c * Rational(Integer(2 * n + 1), 2);
        if (lo.sign() * hi.sign() < 0) return n;
      }
    }
  }
  const FieldElement t = -(d * c.inverse());
  const Integer n0 = t.floor();
  const int half = compare(t - FieldElement(field, Rational(n0)), FieldElement(field, Rational(1, 2)));
  if (half < 0) return n0;
  if (half > 0) return n0 + 1;
  return abs(n0) <= abs(Integer(n0 + 1)) ? n0 : Integer(n0 + 1);
}

ReductionTrace rosen_reduce(const DoubleCosetRow& row, const HeckeGroup& group, size_t iteration_cap) {
  if (&row.c.field() != group.field || &row.d.field() != group.field) {
    throw std::invalid_argument("rosen_reduce: row from a different field");
  }
  if (row.c.sign() == 0) throw TrivialDoubleCoset("rosen_reduce: c = 0 is the trivial double coset");
  ReductionTrace trace{row, {}, row};
  DoubleCosetRow cur = row;
  for (size_t it = 0; it < iteration_cap; ++it) {
    const Integer n = nearest_shift(cur.d, cur.c);
    if (n != 0) {
      DoubleCosetRow next{cur.c, cur.d + cur.c * Rational(n)};
      trace.steps.push_back({ReductionStep::Kind::Translate, n, cur, next});
      cur = std::move(next);
    }
    if (cur.d.sign() == 0) {
      if (compare_abs(cur.c, group.lambda) != 0) {
        throw ReductionError("reduction ended at row (" + cur.to_string() + "), not of iota type");
      }
      trace.terminal = cur;
      return trace;
    }
    DoubleCosetRow next = swap_row(cur, group);
    trace.steps.push_back({ReductionStep::Kind::Swap, Integer(0), cur, next});
    cur = std::move(next);
    if (compare_abs(cur.c, group.lambda) < 0) {
      throw ReductionError("reduction reached |c| < lambda at row (" + cur.to_string() + ")");
    }
  }
  throw ReductionError("rosen_reduce: iteration cap " + std::to_string(iteration_cap) + " exceeded");
}

FieldElement swap_increment(const DoubleCosetRow& row, const HeckeGroup& group) {
  const int sc = row.c.sign(), sd = row.d.sign();
  if (sc == 0 || sd == 0) throw TrivialDoubleCoset("swap_increment needs c d != 0");
  const FieldElement lam2 = group.lambda * group.lambda;
  const FieldElement num = row.c * row.c + lam2 + lam2 * row.d * row.d;
  const FieldElement den = lam2 * row.c * row.d;
  FieldElement r = num * den.inverse() * group.covolume_over_4pi;
  r -= group.constant(ratio(sc * sd, 4));
  return r;
}

SymbolValue symbol_descent(const DoubleCosetRow& row, const HeckeGroup& group) {
  const ReductionTrace trace = rosen_reduce(row, group);
  // S_r(c,d) = S_r(swap(c,d)) + increment(c,d); translations leave S_r unchanged.
  FieldElement total(*group.field);
  for (const auto& step : trace.steps) {
    if (step.kind == ReductionStep::Kind::Swap) total += swap_increment(step.before, group);
  }
  return {std::move(total)};
}

FieldElement three_term_residual(const Word& g, const Word& h, const HeckeGroup& group) {
  const NormalizedElement mg = word_to_matrix(g, group);
  const NormalizedElement mh = word_to_matrix(h, group);
  const NormalizedElement mgh = word_to_matrix(g + h, group);
  const FieldElement& cg = mg.matrix.c();
  const FieldElement& ch = mh.matrix.c();
  const FieldElement& cgh = mgh.matrix.c();
  if (cg.sign() == 0 || ch.sign() == 0 || cgh.sign() == 0) {
    throw TrivialDoubleCoset("three-term relation needs c_g, c_h, c_gh all nonzero");
  }
  const FieldElement lhs =
      symbol_from_word(g, group).value + symbol_from_word(h, group).value - symbol_from_word(g + h, group).value;
  const FieldElement prod = cg * ch * cgh;
  FieldElement rhs = (cg * cg + ch * ch + cgh * cgh) * prod.inverse() * group.covolume_over_4pi;
  rhs -= group.constant(Rational(prod.sign(), 4));
  return lhs - rhs;
}

FieldElement reciprocity_residual_hecke(const Word& g, const HeckeGroup& group) {
  const NormalizedElement m = word_to_matrix(g, group);
  const DoubleCosetRow row = row_of(m);
  if (row.c.sign() == 0 || row.d.sign() == 0) {
    throw TrivialDoubleCoset("reciprocity needs c d != 0");
  }
  Word gi = g;
  gi.append(Generator::Iota, 1);
  const FieldElement lhs = symbol_from_word(g, group).value - symbol_from_word(gi, group).value;
  return lhs - swap_increment(row, group);
}

std::optional<Word> membership(const GroupElement& m, const HeckeGroup& group, size_t iteration_cap) {
  if (&m.field() != group.field) throw std::invalid_argument("membership: matrix from a different field");
  const NormalizedElement target = normalize(m, group);
  GroupElement x = target.matrix;
  // x = target * (recorded letters); peel until x is a translation up to sign.
  Word recorded;
  size_t it = 0;
  while (x.c().sign() != 0) {
    if (++it > iteration_cap) {
      throw ReductionError("membership: iteration cap " + std::to_string(iteration_cap) + " exceeded");
    }
    if (compare_abs(x.c(), group.lambda) < 0) return std::nullopt;
    const Integer n = nearest_shift(x.d(), x.c());
    if (n != 0) {
      const FieldElement one = group.constant(1);
      x = x * GroupElement(one, group.constant(Rational(n)), group.constant(0), one);
      recorded.append(Generator::Tau, n.get_si());
    }
    x = x * group.iota_normalized;
    recorded.append(Generator::Iota, 1);
  }
  // x = +-(1, n; 0, 1) with n a rational integer.
  const FieldElement one = group.constant(1);
  int sign_a = 0;
  if (x.a() == one && x.d() == one) sign_a = 1;
  if (x.a() == -one && x.d() == -one) sign_a = -1;
  if (sign_a == 0 || !x.b().is_rational() || x.b().coord(0).get_den() != 1) return std::nullopt;
  const Integer shift = x.b().coord(0).get_num() * sign_a;
  if (!shift.fits_slong_p()) throw ReductionError("membership: translation exponent overflow");
  Word w;
  if (sign_a < 0) w.append(Generator::Iota, 2);
  w.append(Generator::Tau, shift.get_si());
  w.append(recorded.inverse());
  if (!(word_to_matrix(w, group).matrix == target.matrix)) {
    throw std::logic_error("membership: recovered word does not reproduce the matrix");
  }
  return w;
}

Word word_for_row(const DoubleCosetRow& row, const HeckeGroup& group, size_t iteration_cap) {
  const ReductionTrace trace = rosen_reduce(row, group, iteration_cap);
  // row * P = (+-lambda, 0), the row of +-iota'; row(x y) = row(x) y.
  Word p;
  for (const auto& step : trace.steps) {
    if (step.kind == ReductionStep::Kind::Swap) {
      p.append(Generator::Iota, 1);
    } else {
      if (!step.shift.fits_slong_p()) throw ReductionError("word_for_row: translation exponent overflow");
      p.append(Generator::Tau, step.shift.get_si());
    }
  }
  Word w;
  w.append(Generator::Iota, trace.terminal.c.sign() > 0 ? 1 : -1);
  w.append(p.inverse());
  return w;
}

std::vector<Word> reduced_words(size_t max_length, std::span<const long> tau_exponents) {
  std::vector<Word> out;
  std::vector<Word> layer;
  for (long k : tau_exponents) {
    Word w;
    w.append(Generator::Tau, k);
    layer.push_back(w);
  }
  Word iota;
  iota.append(Generator::Iota, 1);
  layer.push_back(iota);
  for (size_t len = 1; len <= max_length && !layer.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      out.push_back(w);
      if (len == max_length) continue;
      if (w.letters().back().generator == Generator::Iota) {
        for (long k : tau_exponents) {
          Word x = w;
          x.append(Generator::Tau, k);
          next.push_back(std::move(x));
        }
      } else {
        Word x = w;
        x.append(Generator::Iota, 1);
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  return out;
}

RationalityReport rationality_report(const Word& w, const HeckeGroup& group) {
  const SymbolValue psi = psi_word(w, group);
  RationalityReport report;
  for (const auto& c : psi.coords()) report.psi_coords.push_back(c);
  report.higher_vanish = true;
  for (size_t k = 2; k < report.psi_coords.size(); ++k) report.higher_vanish &= report.psi_coords[k] == 0;
  report.r = report.psi_coords[0];
  report.s = report.psi_coords.size() > 1 ? report.psi_coords[1] : Rational(0);
  report.rational = report.higher_vanish && report.s == 0;
  return report;
}

}  // namespace dedesym
