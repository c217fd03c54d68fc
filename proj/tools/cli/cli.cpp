#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "builtins.hpp"
#include "crosscheck.hpp"
#include "csv.hpp"
#include "prabhakar/errors.hpp"
#include "prabhakar/fde.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/special_functions.hpp"
#include "prabhakar/visco.hpp"

namespace prabhakar::cli {
namespace {

struct HelpRequested {
  std::string text;
};

struct SubcommandSpec {
  Subcommand kind;
  const char* name;
  const char* description;
  std::vector<std::pair<const char*, const char*>> flags;
};

const std::vector<SubcommandSpec>& subcommand_specs() {
  static const std::vector<SubcommandSpec> specs = {
      {Subcommand::Eval, "eval", "Evaluate a special function or relaxation modulus",
       {{"fn", "gamma|pochhammer|mittag-leffler|prabhakar|prabhakar-kernel|relaxation-sb|"
               "relaxation-cf|relaxation-abc"},
        {"x", "argument of gamma"},
        {"k", "pochhammer index"},
        {"z", "argument of the Mittag-Leffler / Prabhakar function"},
        {"t", "time"},
        {"alpha", "alpha"},
        {"beta", "beta"},
        {"gamma", "gamma"},
        {"omega", "omega"},
        {"eta", "viscosity"}}},
      {Subcommand::Apply, "apply", "Apply an operator to a builtin function",
       {{"op", "rl|caputo|cf|abc|prabhakar"},
        {"f", "const1|t|t2|sin|exp-decay"},
        {"alpha", "operator order (alpha of the Prabhakar kernel)"},
        {"beta", "Prabhakar beta"},
        {"gamma", "Prabhakar gamma"},
        {"omega", "Prabhakar omega"},
        {"T", "horizon (default 1)"},
        {"h", "step (default 0.01)"}}},
      {Subcommand::Solve, "solve", "Solve D^alpha y = F(t, y)",
       {{"op", "cf|abc|caputo"},
        {"rhs", "decay|const|forced"},
        {"form", "ode|integral|caputo|adams (default: integral, adams for caputo)"},
        {"alpha", "order (default 0.5)"},
        {"y0", "initial value (default 1)"},
        {"T", "horizon (default 5)"},
        {"h", "step (default 0.001)"},
        {"tol", "fixed-point tolerance (default 1e-12)"}}},
      {Subcommand::Crosscheck, "crosscheck", "Compare two evaluation paths of a theorem",
       {{"theorem", "1..7"},
        {"f", "restrict to one builtin function"},
        {"rhs", "restrict to one builtin rhs (theorems 6, 7)"},
        {"alpha", "restrict to one order (theorem 1: kernel alpha)"},
        {"beta", "theorem 1 beta"},
        {"gamma", "theorem 1 gamma"},
        {"omega", "theorem 1 omega"},
        {"y0", "initial value for theorems 6, 7"},
        {"T", "horizon"},
        {"h", "step"},
        {"K", "series terms (default from --tol)"},
        {"tol", "series truncation tolerance"}}},
      {Subcommand::Figure1, "figure1", "Relaxation moduli on a log grid",
       {{"alpha", "order (default 0.5)"},
        {"eta", "viscosity (default 1)"},
        {"points", "grid size (default 400)"},
        {"tmin", "first time (default 0.01)"},
        {"tmax", "last time (default 100)"}}},
  };
  return specs;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

void run_eval(const RunConfig& c, CsvWriter& csv) {
  const std::string fn = c.text("fn");
  double value = 0.0;
  if (fn == "gamma") {
    value = gamma_fn(c.number("x"));
  } else if (fn == "pochhammer") {
    value = pochhammer(c.number("gamma"), c.integer("k", 0));
  } else if (fn == "mittag-leffler") {
    value = mittag_leffler(c.number("alpha"), c.number("z"));
  } else if (fn == "prabhakar") {
    value = prabhakar_function({c.number("alpha"), c.number("beta", 1.0), c.number("gamma", 1.0)},
                               c.number("z"));
  } else if (fn == "prabhakar-kernel") {
    value = prabhakar_kernel({c.number("alpha"), c.number("beta", 1.0), c.number("gamma", 1.0),
                              c.number("omega", 0.0)},
                             c.number("t"));
  } else if (fn == "relaxation-sb" || fn == "relaxation-cf" || fn == "relaxation-abc") {
    const MaterialParams p{c.number("eta", 1.0), c.number("alpha", 0.5), {}};
    const double t = c.number("t");
    value = fn == "relaxation-sb"   ? relaxation_scott_blair(p, t)
            : fn == "relaxation-cf" ? relaxation_cf(p, t)
                                    : relaxation_abc(p, t);
  } else {
    throw UsageError("unknown --fn '" + fn + "'");
  }
  csv.header({"value"});
  csv.row({value});
}

void run_apply(const RunConfig& c, CsvWriter& csv) {
  const std::string op = c.text("op");
  const auto fn = builtin_function(c.text("f"));
  const double h = c.number("h", 1e-2);
  const auto g = fn.sample(0.0, h, step_count(0.0, c.number("T", 1.0), h));

  OperatorSpec spec;
  spec.order = c.number("alpha", 0.5);
  if (op == "rl") {
    spec.kind = OperatorKind::RlIntegral;
  } else if (op == "caputo") {
    spec.kind = OperatorKind::CaputoDerivative;
  } else if (op == "cf") {
    spec.kind = OperatorKind::CfDerivative;
  } else if (op == "abc") {
    spec.kind = OperatorKind::AbcDerivative;
  } else if (op == "prabhakar") {
    spec.kind = OperatorKind::PrabhakarIntegral;
    spec.prabhakar = PrabhakarParams{spec.order, c.number("beta", 1.0), c.number("gamma", 1.0),
                                     c.number("omega", 0.0)};
  } else {
    throw UsageError("unknown --op '" + op + "'; valid: rl, caputo, cf, abc, prabhakar");
  }
  const auto result = apply(spec, g, DerivativeSource::RequireSamples);
  csv.header({"t", "f", "value"});
  for (std::size_t i = 0; i < g.size(); ++i) csv.row({g.time(i), g.values[i], result.values[i]});
}

void run_solve(const RunConfig& c, CsvWriter& csv) {
  const std::string op = c.text("op");
  FDEProblem prob;
  SolverPath path = SolverPath::IntegralForm;
  if (op == "cf") {
    prob.op.kind = OperatorKind::CfDerivative;
  } else if (op == "abc") {
    prob.op.kind = OperatorKind::AbcDerivative;
  } else if (op == "caputo") {
    prob.op.kind = OperatorKind::CaputoDerivative;
    path = SolverPath::Adams;
  } else {
    throw UsageError("unknown --op '" + op + "'; valid: cf, abc, caputo");
  }
  if (c.has("form")) {
    const std::string form = c.text("form");
    if (form == "ode") {
      path = SolverPath::OdeForm;
    } else if (form == "integral") {
      path = SolverPath::IntegralForm;
    } else if (form == "caputo") {
      path = SolverPath::CaputoForm;
    } else if (form == "adams") {
      path = SolverPath::Adams;
    } else {
      throw UsageError("unknown --form '" + form + "'; valid: ode, integral, caputo, adams");
    }
    const bool fits = (path == SolverPath::OdeForm && op == "cf") ||
                      (path == SolverPath::IntegralForm && op != "caputo") ||
                      (path == SolverPath::CaputoForm && op == "abc") ||
                      (path == SolverPath::Adams && op == "caputo");
    if (!fits) throw UsageError("--form " + form + " does not apply to --op " + op);
  }
  prob.op.order = c.number("alpha", 0.5);
  prob.rhs = builtin_rhs(c.text("rhs", "decay"));
  prob.y0 = c.number("y0", 1.0);
  prob.T = c.number("T", 5.0);
  prob.h = c.number("h", 1e-3);
  FixedPointOptions opts;
  opts.tol = c.number("tol", opts.tol);
  const auto traj = solve(prob, path, opts);
  csv.header({"t", "y", "residual"});
  for (std::size_t i = 0; i < traj.size(); ++i) {
    csv.row({traj.times[i], traj.values[i], traj.residuals[i]});
  }
}

bool run_crosscheck(const RunConfig& c, CsvWriter& csv) {
  const long theorem = c.integer("theorem", 0);
  const auto cases = crosscheck(static_cast<int>(theorem), c);
  csv.header({"theorem", "subject", "alpha", "discrepancy", "tolerance", "verdict"});
  bool all = true;
  for (const auto& k : cases) {
    all = all && k.pass();
    csv.row({std::to_string(theorem), k.subject, csv.number(k.alpha), csv.number(k.discrepancy),
             csv.number(k.tolerance), k.pass() ? "PASS" : "FAIL"});
  }
  return all;
}

void run_figure1(const RunConfig& c, CsvWriter& csv) {
  const long points = c.integer("points", 400);
  if (points < 2) throw UsageError("--points must be >= 2");
  const auto grid =
      log_grid(c.number("tmin", 1e-2), c.number("tmax", 1e2), static_cast<std::size_t>(points));
  const auto rows = figure1_dataset(c.number("alpha", 0.5), c.number("eta", 1.0), grid);
  csv.header({"t", "G_SB", "G_CF_over_M", "G_ABC_over_B"});
  for (const auto& r : rows) csv.row({r.t, r.scott_blair, r.cf_over_m, r.abc_over_b});
}

}  // namespace

const char* to_string(Subcommand s) {
  for (const auto& spec : subcommand_specs()) {
    if (spec.kind == s) return spec.name;
  }
  return "unknown";
}

double RunConfig::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

double RunConfig::number(const std::string& key) const {
  const auto it = parameters.find(key);
  if (it == parameters.end()) throw UsageError("missing required flag --" + key);
  const char* begin = it->second.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw UsageError("--" + key + " expects a finite number, got '" + it->second + "'");
  }
  return v;
}

long RunConfig::integer(const std::string& key, long fallback) const {
  const auto it = parameters.find(key);
  if (it == parameters.end()) return fallback;
  const char* begin = it->second.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw UsageError("--" + key + " expects an integer, got '" + it->second + "'");
  }
  return v;
}

std::string RunConfig::text(const std::string& key, const std::string& fallback) const {
  return has(key) ? parameters.at(key) : fallback;
}

std::string RunConfig::text(const std::string& key) const {
  if (!has(key)) throw UsageError("missing required flag --" + key);
  return parameters.at(key);
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Prabhakar-type fractional calculus workbench", "prabhakar"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);

  RunConfig config;
  std::string out_path;
  int precision = 12;
  // one storage slot per (subcommand, flag)
  std::vector<std::unique_ptr<std::string>> storage;
  struct Bound {
    CLI::App* sub;
    Subcommand kind;
    std::vector<std::pair<std::string, CLI::Option*>> options;
    std::vector<std::string*> values;
  };
  std::vector<Bound> bound;
  for (const auto& spec : subcommand_specs()) {
    Bound b{app.add_subcommand(spec.name, spec.description), spec.kind, {}, {}};
    for (const auto& [flag, help] : spec.flags) {
      storage.push_back(std::make_unique<std::string>());
      b.options.emplace_back(flag, b.sub->add_option(std::string("--") + flag, *storage.back(), help));
      b.values.push_back(storage.back().get());
    }
    b.sub->add_option("--out", out_path, "write CSV here instead of stdout");
    b.sub->add_option("--precision", precision, "significant digits (default 12)")
        ->check(CLI::Range(1, 17));
    bound.push_back(std::move(b));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& b : bound) {
    if (!b.sub->parsed()) continue;
    config.subcommand = b.kind;
    for (std::size_t i = 0; i < b.options.size(); ++i) {
      if (b.options[i].second->count() > 0) config.parameters[b.options[i].first] = *b.values[i];
    }
  }
  if (!out_path.empty()) config.output_path = out_path;
  config.precision = precision;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto fail = [&err](const char* kind, const std::string& message, int code) {
    err << "error: " << kind << ": " << one_line(message) << '\n';
    return code;
  };
  std::ostringstream buffer;
  CsvWriter csv(buffer, config.precision);
  bool passed = true;
  try {
    switch (config.subcommand) {
      case Subcommand::Eval:
        run_eval(config, csv);
        break;
      case Subcommand::Apply:
        run_apply(config, csv);
        break;
      case Subcommand::Solve:
        run_solve(config, csv);
        break;
      case Subcommand::Crosscheck:
        passed = run_crosscheck(config, csv);
        break;
      case Subcommand::Figure1:
        run_figure1(config, csv);
        break;
    }
  } catch (const UsageError& e) {
    return fail("parse", e.what(), exit_code::kParse);
  } catch (const RangeError& e) {
    return fail("range", e.what(), exit_code::kDomain);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), exit_code::kDomain);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), exit_code::kDomain);
  } catch (const ConvergenceError& e) {
    return fail("convergence", e.what(), exit_code::kConvergence);
  } catch (const SolverError& e) {
    return fail("solver", e.what(), exit_code::kConvergence);
  } catch (const InversionError& e) {
    return fail("inversion", e.what(), exit_code::kConvergence);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), exit_code::kFail);
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) return fail("io", "cannot open " + *config.output_path, exit_code::kFail);
    file << buffer.str();
    if (!file) return fail("io", "cannot write " + *config.output_path, exit_code::kFail);
  } else {
    out << buffer.str();
  }
  if (!passed) return fail("crosscheck", "at least one comparison exceeded its tolerance",
                           exit_code::kFail);
  return exit_code::kOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return exit_code::kOk;
  } catch (const UsageError& e) {
    err << "error: parse: " << one_line(e.what()) << '\n';
    return exit_code::kParse;
  }
  return run(config, out, err);
}

}  // namespace prabhakar::cli
