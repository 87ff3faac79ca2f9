#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sympstairs/classes.hpp"
#include "sympstairs/cremona.hpp"
#include "sympstairs/ech.hpp"
#include "sympstairs/embedding.hpp"
#include "sympstairs/errors.hpp"
#include "sympstairs/report.hpp"
#include "sympstairs/verify.hpp"

namespace sympstairs {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

/// Bad input detected after CLI11 parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unwritable output; maps to exit code 1.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::size_t> env_max_steps() {
  const char* raw = std::getenv("SYMPSTAIRS_MAX_STEPS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const long v = std::stol(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("SYMPSTAIRS_MAX_STEPS must be a positive integer");
  }
}

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

QuadNum parse_quad(const std::string& text, const char* what) {
  try {
    return QuadNum::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

long integer_b(const Rational& b) {
  if (!b.is_integer() || b < 2) throw UsageError("--b must be an integer >= 2 for this command");
  return b.numerator().get_si();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("write to '" + path + "' failed");
}

struct Args {
  std::string b = "2";
  std::string a;
  std::string lambda;
  std::string method = "closed";
  std::size_t n = 10000;
  std::string tol = "1/10000";
  std::string out;
  std::string trace;
  std::string a_min = "1";
  std::string a_max = "10";
  std::size_t samples = 200;
  bool breakpoints = true;
  std::vector<std::string> overlays;
  std::vector<std::string> b_list;
  long den = 4;
  std::string suite;
  long max_n = 30;
  long max_g = 20;
  long max_den = 12;
  long d = -1;
  long e = -1;
  std::size_t max_tail = 0;
  bool certified_only = false;
  std::string vector;
  std::string verify_b;
  bool n_given = false;
  std::optional<std::size_t> max_steps;
};

int cmd_eval(const Args& args, std::ostream& out) {
  if (args.a.empty()) throw UsageError("eval needs --a");
  const Rational b = parse_rational(args.b, "--b");
  const Rational a = parse_rational(args.a, "--a");
  if (a < 1) throw UsageError("--a must be >= 1");

  if (!args.lambda.empty()) {
    const QuadNum lambda = parse_quad(args.lambda, "--lambda");
    const long bi = integer_b(b);
    if (lambda.sign() <= 0) throw UsageError("--lambda must be positive");
    const auto v = capacity_vector(bi, a, lambda);
    const Decision d = method2_cb_decide(bi, a, lambda, args.max_steps);
    out << to_string(d) << "\n";
    if (!args.trace.empty()) emit(format_trace(reduce_to_reduced(v, args.max_steps)), args.trace, out);
    return exit_ok;
  }

  if (args.method == "closed") {
    const auto s = cb_closed(integer_b(b), a);
    out << s.value.str() << " " << format_float(s.value.to_double()) << " " << branch_name(s) << "\n";
  } else if (args.method == "bisect") {
    const Rational tol = parse_rational(args.tol, "--tol");
    if (tol.sign() <= 0) throw UsageError("--tol must be positive");
    const auto br = cb_bisect(integer_b(b), a, tol, args.max_steps);
    out << "[" << br.lo.str() << "," << br.hi.str() << "] " << format_float(br.lo.to_double()) << " "
        << format_float(br.hi.to_double()) << "\n";
  } else if (args.method == "ech") {
    if (b < 1) throw UsageError("--b must be >= 1");
    const auto e = ech_lower_bound_at(b, a, args.n);
    out << e.value.str() << " " << format_float(e.value.to_double()) << " k=" << e.k << "\n";
  } else if (args.method == "db") {
    if (b < 2) throw UsageError("--b must be >= 2");
    const QuadNum v = db_real(b, a);
    out << v.str() << " " << format_float(v.to_double()) << "\n";
  } else {
    throw UsageError("unknown --method '" + args.method + "' (closed, bisect, ech, db)");
  }
  return exit_ok;
}

std::vector<Rational> grid_from(const Args& args) {
  const Rational lo = parse_rational(args.a_min, "--a-min");
  const Rational hi = parse_rational(args.a_max, "--a-max");
  if (lo < 1 || hi < lo) throw UsageError("need 1 <= --a-min <= --a-max");
  if (args.samples < 2) throw UsageError("--samples must be >= 2");
  return a_grid(lo, hi, args.samples);
}

int cmd_table(const Args& args, std::ostream& out) {
  const long b = integer_b(parse_rational(args.b, "--b"));
  auto grid = grid_from(args);
  if (args.breakpoints) grid = merge_grid(grid, rational_breakpoints(b, grid.front(), grid.back()));
  emit(curve_csv(b, grid), args.out, out);
  return exit_ok;
}

int cmd_plot(const Args& args, std::ostream& out) {
  PlotSpec spec;
  spec.b = parse_rational(args.b, "--b");
  if (spec.b < 1) throw UsageError("--b must be >= 1");
  spec.lo = parse_rational(args.a_min, "--a-min");
  spec.hi = parse_rational(args.a_max, "--a-max");
  spec.samples = args.samples;
  if (spec.samples < 2 || spec.hi <= spec.lo) throw UsageError("need --samples >= 2 and --a-min < --a-max");
  for (const auto& o : args.overlays) {
    if (o == "closed") spec.overlays.closed = true;
    else if (o == "volume") spec.overlays.volume = true;
    else if (o == "folding") spec.overlays.folding = true;
    else if (o == "db_real") spec.overlays.db_real = true;
    else if (o == "rescaled") spec.overlays.rescaled = true;
    else if (o == "ech") spec.overlays.ech = args.n;
    else throw UsageError("unknown overlay '" + o + "'");
  }
  const bool rescaled_only = spec.overlays.rescaled;
  if (spec.lo < (rescaled_only ? Rational(0) : Rational(1))) throw UsageError("--a-min out of range");
  if ((spec.overlays.closed || spec.overlays.rescaled) && !spec.b.is_integer())
    throw UsageError("closed and rescaled overlays need an integer --b");
  if (spec.overlays.db_real && spec.b < 2) throw UsageError("db_real overlay needs --b >= 2");
  emit(render_svg(spec), args.out, out);
  return exit_ok;
}

int cmd_verify(const Args& args, std::ostream& out) {
  VerifyOptions opt;
  if (!args.verify_b.empty()) opt.b = integer_b(parse_rational(args.verify_b, "--b"));
  opt.max_n = args.max_n;
  opt.max_g = args.max_g;
  opt.max_den = args.max_den;
  if (args.n_given) opt.ech_n = args.n;
  std::vector<std::string> suites;
  if (args.suite == "all")
    suites = suite_names();
  else
    suites = {args.suite};
  bool all = true;
  for (const auto& s : suites) {
    for (const auto& line : run_suite(s, opt)) {
      out << format_check(line) << "\n";
      all = all && line.pass;
    }
  }
  if (!args.trace.empty()) {
    std::string text;
    for (long n = 1; n <= args.max_n; ++n)
      for (const auto& c : {gen_E(n), gen_F(n)})
        text += "# " + c.name + " " + format_class(c) + "\n" + format_trace(certify(c.d, c.e, c.m).trace);
    emit(text, args.trace, out);
  }
  return all ? exit_ok : exit_runtime;
}

int cmd_scan(const Args& args, std::ostream& out) {
  std::vector<Rational> bs;
  for (const auto& s : args.b_list) bs.push_back(parse_rational(s, "--b"));
  if (bs.empty()) bs.push_back(parse_rational(args.b, "--b"));
  for (const auto& b : bs)
    if (b < 2) throw UsageError("scan needs every --b >= 2");
  const Rational lo = parse_rational(args.a_min, "--a-min");
  const Rational hi = parse_rational(args.a_max, "--a-max");
  if (lo < 1 || hi < lo || args.den < 1) throw UsageError("need 1 <= --a-min <= --a-max and --den >= 1");
  std::vector<Rational> grid;
  for (Rational a = lo; a <= hi; a += Rational(1, args.den)) grid.push_back(a);
  const auto result = scan_conjecture(bs, grid, args.n);
  emit(result.csv, args.out, out);
  return exit_ok;
}

int cmd_classes(const Args& args, std::ostream& out) {
  std::string text;
  if (args.d >= 0 || args.e >= 0) {
    if (args.d < 0 || args.e < 0) throw UsageError("classes needs both --d and --e");
    const std::size_t tail = args.max_tail > 0 ? args.max_tail : static_cast<std::size_t>(std::max(1L, 2 * (args.d + args.e) - 1));
    for (const auto& m : enumerate_dio_solutions(args.d, args.e, tail)) {
      const ExceptionalClass c{"", args.d, args.e, m, false, 0};
      if (args.certified_only && !certify(c.d, c.e, c.m).ok()) continue;
      text += format_class(c) + "\n";
    }
  } else {
    text += format_class(gen_E(0)) + "\n";
    for (long n = 1; n <= args.max_n; ++n) text += format_class(gen_E(n)) + "\n";
    for (long n = 1; n <= args.max_n; ++n) text += format_class(gen_F(n)) + "\n";
    for (long n = 1; n <= args.max_n; ++n) text += format_class(gen_G(n)) + "\n";
  }
  emit(text, args.out, out);
  return exit_ok;
}

int cmd_reduce(const Args& args, std::ostream& out) {
  if (args.vector.empty()) throw UsageError("reduce needs a vector 'head;t1,t2,...'");
  BlowupVector<QuadNum> v;
  try {
    v = parse_vector(args.vector);
  } catch (const std::exception& e) {
    throw UsageError(std::string("vector: ") + e.what());
  }
  if (v.head.sign() < 0) throw UsageError("reduce needs a nonnegative head");
  const auto trace = reduce_to_reduced(v, args.max_steps);
  emit(format_trace(trace), args.trace.empty() ? args.out : args.trace, out);
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embedding capacities of ellipsoids into polydiscs, in exact arithmetic"};
  app.name("sympstairs");
  app.require_subcommand(1);
  Args args;

  auto* eval = app.add_subcommand("eval", "Evaluate c_b(a)");
  eval->add_option("--b", args.b, "b (integer >= 2 for closed/bisect, rational for ech/db)");
  eval->add_option("--a", args.a, "a >= 1 (p or p/q)")->required();
  eval->add_option("--method", args.method, "closed | bisect | ech | db");
  eval->add_option("--lambda", args.lambda, "decide E(1,a) -> P(lambda, lambda b) by reduction");
  eval->add_option("--n", args.n, "number of ECH capacities");
  eval->add_option("--tol", args.tol, "bisection tolerance");
  eval->add_option("--trace", args.trace, "write the reduction trace here (with --lambda)");

  auto* table = app.add_subcommand("table", "CSV of c_b over an a-range");
  table->add_option("--b", args.b, "integer b >= 2");
  table->add_option("--a-min", args.a_min, "left end of the range");
  table->add_option("--a-max", args.a_max, "right end of the range");
  table->add_option("--samples", args.samples, "equally spaced samples");
  table->add_flag("!--no-breakpoints", args.breakpoints, "omit the breakpoints from the grid");
  table->add_option("--out", args.out, "output file (default stdout)");

  auto* plot = app.add_subcommand("plot", "SVG plot");
  plot->add_option("--b", args.b, "b");
  plot->add_option("--a-min", args.a_min, "left end of the range");
  plot->add_option("--a-max", args.a_max, "right end of the range");
  plot->add_option("--samples", args.samples, "equally spaced samples");
  plot->add_option("--overlay", args.overlays, "closed, volume, folding, ech, db_real, rescaled");
  plot->add_option("--n", args.n, "number of ECH capacities for the ech overlay");
  plot->add_option("--out", args.out, "output SVG file")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", args.suite, "weights | classes | edges | method2 | equivalence | ech | geometry | alarge | all")
      ->required();
  verify->add_option("--b", args.verify_b, "restrict to one integer b");
  verify->add_option("--max-n", args.max_n, "largest n for E_n, F_n");
  verify->add_option("--max-g", args.max_g, "largest b for G_b");
  verify->add_option("--max-den", args.max_den, "grid denominator for the method2 sweep");
  verify->add_option("--n", args.n, "number of ECH capacities");
  verify->add_option("--trace", args.trace, "write E_n/F_n certification traces here");

  auto* scan = app.add_subcommand("scan", "Compare d_b(a) with ECH lower bounds");
  scan->add_option("--b", args.b_list, "one or more b >= 2 (rational)");
  scan->add_option("--a-min", args.a_min, "left end of the range");
  scan->add_option("--a-max", args.a_max, "right end of the range");
  scan->add_option("--den", args.den, "grid step 1/den");
  scan->add_option("--n", args.n, "number of ECH capacities");
  scan->add_option("--out", args.out, "output file (default stdout)");

  auto* classes = app.add_subcommand("classes", "List exceptional classes");
  classes->add_option("--d", args.d, "enumerate solutions for this d");
  classes->add_option("--e", args.e, "enumerate solutions for this e");
  classes->add_option("--max-tail", args.max_tail, "longest m to consider");
  classes->add_flag("--certified", args.certified_only, "keep only classes that reduce to (0;-1)");
  classes->add_option("--max-n", args.max_n, "largest index for the E, F, G families");
  classes->add_option("--out", args.out, "output file (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "Reduce a vector by standard Cremona moves");
  reduce->add_option("vector", args.vector, "'head;t1,t2,...' in the exact-number format")->required();
  reduce->add_option("--out", args.out, "output file (default stdout)");
  reduce->add_option("--trace", args.trace, "same as --out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  // classes --max-n defaults to a short listing
  if (classes->parsed() && classes->count("--max-n") == 0) args.max_n = 5;

  try {
    args.max_steps = env_max_steps();
    if (eval->parsed()) return cmd_eval(args, out);
    if (table->parsed()) return cmd_table(args, out);
    if (plot->parsed()) return cmd_plot(args, out);
    if (verify->parsed()) {
      args.n_given = verify->count("--n") > 0;
      return cmd_verify(args, out);
    }
    if (scan->parsed()) return cmd_scan(args, out);
    if (classes->parsed()) return cmd_classes(args, out);
    if (reduce->parsed()) return cmd_reduce(args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_runtime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_runtime;
  }
  return exit_usage;
}

}  // namespace sympstairs
