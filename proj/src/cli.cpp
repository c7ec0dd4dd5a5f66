#include "dedesym/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "dedesym/acceptance.hpp"
#include "dedesym/classical.hpp"
#include "dedesym/cocycle.hpp"
#include "dedesym/equidist.hpp"
#include "dedesym/hecke.hpp"

namespace dedesym {

namespace {

using json = nlohmann::json;

/// Bad input that parsed syntactically; reported like a usage error.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  int bits = 128;
};

json wrap(const FieldElement& x) { return {{"exact", x.to_string()}, {"float", x.to_double()}, {"q", x.field().q()}}; }

json wrap(const Rational& x, int q = 3) { return {{"exact", to_string(x)}, {"float", x.get_d()}, {"q", q}}; }

Integer parse_integer(const std::string& text, const char* what) {
  try {
    const Rational r = parse_rational(text);
    if (r.get_den() == 1) return r.get_num();
  } catch (const std::invalid_argument&) {
  }
  throw InputError(std::string(what) + ": expected an integer, got '" + text + "'");
}

// "(r, s)" when only the first two power-basis coordinates are used, else the full list.
std::string decomposition_text(const FieldElement& x) {
  const auto c = x.coords();
  std::ostringstream os;
  bool higher = false;
  for (size_t k = 2; k < c.size(); ++k) higher |= c[k] != 0;
  if (!higher) {
    os << "(r, s) = (" << to_string(c[0]) << ", " << (c.size() > 1 ? to_string(c[1]) : std::string("0")) << ")";
  } else {
    os << "coords = [";
    for (size_t k = 0; k < c.size(); ++k) os << (k ? ", " : "") << to_string(c[k]);
    os << "]";
  }
  return os.str();
}

json decomposition_json(const FieldElement& x) {
  json coords = json::array();
  for (const auto& c : x.coords()) coords.push_back(to_string(c));
  return coords;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw InputError(std::string(what) + ": empty list");
  return out;
}

struct SumArgs {
  std::string a, c;
  bool naive = false, fast = false;
};

int cmd_sum(const SumArgs& args, const Globals& g, std::ostream& out) {
  const CoprimePair p = [&] {
    try {
      return CoprimePair::of(parse_integer(args.a, "a"), parse_integer(args.c, "c"));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const bool naive = args.naive && !args.fast;
  const Rational s = naive ? dedekind_sum_naive(p) : dedekind_sum_fast(p);
  if (g.json) {
    json j = wrap(s);
    j["algorithm"] = naive ? "naive" : "fast";
    out << j.dump() << "\n";
  } else {
    out << to_string(s) << "\n";
  }
  return kExitOk;
}

struct PhiArgs {
  std::vector<std::string> entries;
};

int cmd_phi(const PhiArgs& args, const Globals& g, std::ostream& out) {
  IntegerMatrix m;
  try {
    m = IntegerMatrix::checked(parse_integer(args.entries[0], "a"), parse_integer(args.entries[1], "b"),
                               parse_integer(args.entries[2], "c"), parse_integer(args.entries[3], "d"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const Rational phi = rademacher_phi(m);
  if (g.json) {
    json j = wrap(phi);
    j["algorithm"] = "rademacher";
    out << j.dump() << "\n";
  } else {
    out << to_string(phi) << "\n";
  }
  return kExitOk;
}

struct OmegaArgs {
  int q = 3;
  std::string g, h;
};

int cmd_omega(const OmegaArgs& args, const Globals& g, std::ostream& out) {
  const Field& field = Field::of(args.q);
  const GroupElement x = GroupElement::parse(field, args.g);
  const GroupElement y = GroupElement::parse(field, args.h);
  const QuarterInteger w = omega(x, y);
  if (g.json) {
    json j = wrap(w.value(), args.q);
    j["algorithm"] = "sign formula";
    out << j.dump() << "\n";
  } else {
    out << w.to_string() << "\n";
  }
  return kExitOk;
}

struct SymbolArgs {
  int q = 3;
  std::string word, row, algorithm = "both";
};

int cmd_symbol(const SymbolArgs& args, const Globals& g, std::ostream& out) {
  const HeckeGroup group = make_group(args.q);
  std::optional<Word> word;
  DoubleCosetRow row{group.constant(0), group.constant(0)};
  if (!args.word.empty()) {
    word = Word::parse(args.word);
    row = row_of(word_to_matrix(*word, group));
  } else {
    row = parse_row(group, args.row);
  }
  if (row.c.is_zero()) throw TrivialDoubleCoset("symbol undefined on the trivial double coset (c = 0)");
  std::optional<SymbolValue> a, b;
  if (args.algorithm != "b") a = symbol_from_word(word ? *word : word_for_row(row, group), group);
  if (args.algorithm != "a") b = symbol_descent(row, group);
  const SymbolValue& value = a ? *a : *b;
  const bool both = a && b;
  const bool agree = both && *a == *b;
  if (g.json) {
    json j = wrap(value.value);
    j["algorithm"] = args.algorithm;
    j["coords"] = decomposition_json(value.value);
    if (both) {
      j["algorithms_agree"] = agree;
      if (!agree) j["descent"] = wrap(b->value);
    }
    out << j.dump() << "\n";
  } else {
    out << value.to_string() << "\n" << decomposition_text(value.value) << "\n";
    if (both) {
      out << "algorithms_agree: " << (agree ? "true" : "false") << "\n";
      if (!agree) out << "descent: " << b->to_string() << "\n";
    }
  }
  return both && !agree ? kExitCheckFailed : kExitOk;
}

struct MemberArgs {
  int q = 3;
  std::string matrix;
};

int cmd_member(const MemberArgs& args, const Globals& g, std::ostream& out) {
  const HeckeGroup group = make_group(args.q);
  const GroupElement m = GroupElement::parse(*group.field, args.matrix);
  const auto word = membership(m, group);
  if (g.json) {
    json j{{"member", word.has_value()}, {"q", args.q}};
    if (word) j["word"] = word->to_string();
    out << j.dump() << "\n";
  } else if (word) {
    out << "member: true\nword: " << (word->empty() ? "(empty)" : word->to_string()) << "\n";
  } else {
    out << "member: false\n";
  }
  return word ? kExitOk : kExitCheckFailed;
}

struct ReduceArgs {
  int q = 3;
  std::string word, row;
};

int cmd_reduce(const ReduceArgs& args, const Globals& g, std::ostream& out) {
  const HeckeGroup group = make_group(args.q);
  const DoubleCosetRow row =
      args.word.empty() ? parse_row(group, args.row) : row_of(word_to_matrix(Word::parse(args.word), group));
  const ReductionTrace trace = rosen_reduce(row, group);
  if (g.json) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
      json step{{"kind", s.kind == ReductionStep::Kind::Swap ? "swap" : "translate"},
                {"before", s.before.to_string()},
                {"after", s.after.to_string()}};
      if (s.kind == ReductionStep::Kind::Translate) step["shift"] = s.shift.get_str();
      steps.push_back(step);
    }
    out << json{{"q", args.q},
                {"start", trace.start.to_string()},
                {"steps", steps},
                {"terminal", trace.terminal.to_string()},
                {"swaps", trace.swap_count()}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "start: " << trace.start.to_string() << "\n";
  for (const auto& s : trace.steps) {
    if (s.kind == ReductionStep::Kind::Swap) {
      out << "swap: ";
    } else {
      out << "translate " << s.shift.get_str() << ": ";
    }
    out << s.before.to_string() << " -> " << s.after.to_string() << "\n";
  }
  out << "terminal: " << trace.terminal.to_string() << "\nswaps: " << trace.swap_count() << "\n";
  return kExitOk;
}

struct EquidistArgs {
  int q = 3;
  double xmax = 0;
  std::string n = "1,2,3";
  std::string csv;
  std::string checkpoints = "200,400,800,1500";
  bool strict = false;
  size_t max_depth = 256;
  unsigned workers = 0;
};

int cmd_equidist(const EquidistArgs& args, const Globals& g, std::ostream& out) {
  if (!(args.xmax >= 1)) throw InputError("--xmax must be at least 1");
  std::vector<long> ns;
  for (double v : parse_list(args.n, "--n")) {
    if (v != std::floor(v) || v < 0) throw InputError("--n entries must be nonnegative integers");
    ns.push_back(static_cast<long>(v));
  }
  std::vector<double> checkpoints;
  for (double x : parse_list(args.checkpoints, "--checkpoints")) {
    if (x > 0 && x <= args.xmax) checkpoints.push_back(x);
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (checkpoints.empty() || checkpoints.back() != args.xmax) checkpoints.push_back(args.xmax);

  EnumerateOptions options;
  options.bits = g.bits;
  options.max_depth = args.max_depth;
  options.workers = args.workers;
  const CosetTable table = enumerate(args.q, args.xmax, options);

  // Growth exponents come from 15 equally spaced abscissae up to X.
  std::vector<double> grid;
  for (int k = 1; k <= 15; ++k) grid.push_back(args.xmax * k / 15.0);
  std::vector<std::pair<double, double>> counts;
  for (double x : grid) {
    const auto n = table.count_up_to(x);
    if (n > 0) counts.emplace_back(x, static_cast<double>(n));
  }
  std::optional<GrowthFit> count_fit;
  if (counts.size() >= 5) count_fit = growth_fit(counts);

  std::vector<double> disc;
  for (double x : checkpoints) {
    const size_t n = table.count_up_to(x);
    disc.push_back(n ? discrepancy(table.mod1_values(n)) : std::nan(""));
  }
  std::vector<WeylSumSeries> fits, at_checkpoints;
  for (long n : ns) {
    fits.push_back(weyl_series(table, n, grid, g.bits));
    at_checkpoints.push_back(weyl_series(table, n, checkpoints, g.bits));
  }

  bool monotone = true;
  for (size_t k = 1; k < disc.size(); ++k) monotone &= disc[k] <= 1.1 * disc[k - 1];
  std::vector<std::string> violations;
  if (!table.complete) violations.push_back("enumeration incomplete (depth guard hit)");
  if (!(disc.back() < 0.05)) violations.push_back("discrepancy at X not below 0.05");
  if (!monotone) violations.push_back("discrepancy not decreasing over checkpoints (10% jitter)");
  for (const auto& s : fits) {
    if (s.n != 0 && !(s.fitted_exponent <= 1.6)) violations.push_back("W_" + std::to_string(s.n) + " exponent above 1.6");
  }
  if (!count_fit || std::fabs(count_fit->exponent - 2.0) > 0.1) violations.push_back("count exponent not 2.0 +- 0.1");

  if (!args.csv.empty()) {
    const std::filesystem::path path(args.csv);
    export_csv(table, path);
    auto weyl_path = path;
    weyl_path.replace_filename(path.stem().string() + "_weyl" + path.extension().string());
    export_csv(at_checkpoints, weyl_path);
  }

  if (g.json) {
    json j{{"q", args.q}, {"X", args.xmax}, {"entries", table.size()}, {"complete", table.complete}};
    json cps = json::array();
    for (size_t k = 0; k < checkpoints.size(); ++k) {
      cps.push_back({{"X", checkpoints[k]}, {"count", table.count_up_to(checkpoints[k])}, {"discrepancy", disc[k]}});
    }
    j["checkpoints"] = cps;
    json weyl = json::array();
    for (size_t k = 0; k < ns.size(); ++k) {
      json values = json::array();
      for (const auto& [x, w] : at_checkpoints[k].values) {
        values.push_back({{"X", x}, {"re", w.real()}, {"im", w.imag()}, {"abs", std::abs(w)}});
      }
      weyl.push_back({{"n", ns[k]}, {"exponent", fits[k].fitted_exponent}, {"values", values}});
    }
    j["weyl"] = weyl;
    if (count_fit) j["count_fit"] = {{"exponent", count_fit->exponent}, {"constant", count_fit->constant}};
    if (args.strict) {
      j["strict_pass"] = violations.empty();
      j["violations"] = violations;
    }
    out << j.dump() << "\n";
  } else {
    char line[256];
    out << "q=" << args.q << " X=" << args.xmax << " entries=" << table.size()
        << " complete=" << (table.complete ? "true" : "false") << "\n";
    for (size_t k = 0; k < checkpoints.size(); ++k) {
      std::snprintf(line, sizeof line, "X=%-8g count=%-8zu discrepancy=%.6f\n", checkpoints[k],
                    table.count_up_to(checkpoints[k]), disc[k]);
      out << line;
    }
    for (size_t k = 0; k < ns.size(); ++k) {
      std::snprintf(line, sizeof line, "W_%ld: exponent=%.4f |W(X)|=", ns[k], fits[k].fitted_exponent);
      out << line;
      for (size_t i = 0; i < at_checkpoints[k].values.size(); ++i) {
        std::snprintf(line, sizeof line, "%s%.4g", i ? "," : "", std::abs(at_checkpoints[k].values[i].second));
        out << line;
      }
      out << "\n";
    }
    if (count_fit) {
      std::snprintf(line, sizeof line, "count: exponent=%.4f constant=%.5f\n", count_fit->exponent,
                    count_fit->constant);
      out << line;
    }
    if (args.strict) {
      out << "strict: " << (violations.empty() ? "pass" : "FAIL") << "\n";
      for (const auto& v : violations) out << "  " << v << "\n";
    }
  }
  return args.strict && !violations.empty() ? kExitCheckFailed : kExitOk;
}

int cmd_check(const std::string& suite, const Globals& g, std::ostream& out) {
  bool ok = true;
  json results = json::array();
  run_suite(suite, [&](const CriterionResult& r) {
    ok &= r.passed;
    if (g.json) {
      results.push_back(
          {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      out << format_result(r) << std::endl;
    }
  });
  if (g.json) {
    out << json{{"suite", suite}, {"passed", ok}, {"results", results}}.dump() << "\n";
  } else {
    out << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dedekind sums, the SL2 cocycle, and Dedekind symbols for Hecke triangle groups", "dedesym"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Wrap values as {\"exact\", \"float\", \"q\"} JSON");
  app.add_option("--bits", g.bits, "Precision of certified embeddings")->check(CLI::Range(53, 1 << 20));

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "Classical Dedekind sum s(a, c)");
  sum_cmd->add_option("a", sum.a)->required();
  sum_cmd->add_option("c", sum.c)->required();
  auto* naive_flag = sum_cmd->add_flag("--naive", sum.naive, "Defining O(c) sum");
  sum_cmd->add_flag("--fast", sum.fast, "Reciprocity descent (default)")->excludes(naive_flag);

  PhiArgs phi;
  auto* phi_cmd = app.add_subcommand("phi", "Rademacher phi of (a, b; c, d) in SL2(Z)");
  phi_cmd->add_option("entries", phi.entries, "a b c d")->required()->expected(4);

  OmegaArgs om;
  auto* omega_cmd = app.add_subcommand("omega", "Cocycle omega(g, h)");
  omega_cmd->set_help_flag("--help", "Print this help message and exit");
  omega_cmd->add_option("--q", om.q)->check(CLI::Range(3, 1000));
  omega_cmd->add_option("--g", om.g, "a,b,c,d with field literals such as 1/2*L")->required();
  omega_cmd->add_option("--h", om.h)->required();

  SymbolArgs sym;
  auto* symbol_cmd = app.add_subcommand("symbol", "Dedekind symbol of a double coset");
  symbol_cmd->add_option("--q", sym.q)->check(CLI::Range(3, 1000));
  auto* word_opt = symbol_cmd->add_option("--word", sym.word, "e.g. i,t^2,i,t^-1");
  auto* row_opt = symbol_cmd->add_option("--row", sym.row, "<c>;<d> in normalized coordinates");
  word_opt->excludes(row_opt);
  symbol_cmd->add_option("--algorithm", sym.algorithm)->check(CLI::IsMember({"a", "b", "both"}));

  MemberArgs mem;
  auto* member_cmd = app.add_subcommand("member", "Membership in H_q with a word for the matrix");
  member_cmd->add_option("--q", mem.q)->check(CLI::Range(3, 1000));
  member_cmd->add_option("--matrix", mem.matrix, "a,b,c,d in original coordinates")->required();

  ReduceArgs red;
  auto* reduce_cmd = app.add_subcommand("reduce", "Rosen reduction trace of a row");
  reduce_cmd->add_option("--q", red.q)->check(CLI::Range(3, 1000));
  auto* rword = reduce_cmd->add_option("--word", red.word);
  auto* rrow = reduce_cmd->add_option("--row", red.row);
  rword->excludes(rrow);

  EquidistArgs eq;
  auto* equidist_cmd = app.add_subcommand("equidist", "Symbols mod 1: discrepancy and Weyl sums");
  equidist_cmd->add_option("--q", eq.q)->check(CLI::Range(3, 1000));
  equidist_cmd->add_option("--xmax", eq.xmax)->required();
  equidist_cmd->add_option("--n", eq.n, "Comma-separated Weyl frequencies");
  equidist_cmd->add_option("--csv", eq.csv, "Table CSV; Weyl sums go to <stem>_weyl<ext>");
  equidist_cmd->add_option("--checkpoints", eq.checkpoints);
  equidist_cmd->add_flag("--strict", eq.strict, "Exit 1 when a threshold is violated");
  equidist_cmd->add_option("--max-depth", eq.max_depth);
  equidist_cmd->add_option("--workers", eq.workers, "Threads for the q = 3 sieve; 0 = all cores");

  std::string suite = "all";
  auto* check_cmd = app.add_subcommand("check", "Run acceptance criteria");
  check_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if ((symbol_cmd->parsed() && sym.word.empty() && sym.row.empty()) ||
      (reduce_cmd->parsed() && red.word.empty() && red.row.empty())) {
    err << "usage error: one of --word or --row is required\n";
    return kExitUsage;
  }

  try {
    if (sum_cmd->parsed()) return cmd_sum(sum, g, out);
    if (phi_cmd->parsed()) return cmd_phi(phi, g, out);
    if (omega_cmd->parsed()) return cmd_omega(om, g, out);
    if (symbol_cmd->parsed()) return cmd_symbol(sym, g, out);
    if (member_cmd->parsed()) return cmd_member(mem, g, out);
    if (reduce_cmd->parsed()) return cmd_reduce(red, g, out);
    if (equidist_cmd->parsed()) return cmd_equidist(eq, g, out);
    if (check_cmd->parsed()) return cmd_check(suite, g, out);
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ReductionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace dedesym
