#include "crosscheck.hpp"

#include <algorithm>
#include <cmath>

#include "builtins.hpp"
#include "prabhakar/fde.hpp"
#include "prabhakar/operators.hpp"

namespace prabhakar::cli {
namespace {

struct Settings {
  std::vector<double> alphas;
  std::vector<std::string> subjects;
  double T = 5.0;
  double h = 5e-3;
};

Settings settings(const RunConfig& config, std::vector<double> alphas,
                  std::vector<std::string> subjects, double T, double h) {
  Settings s{std::move(alphas), std::move(subjects), config.number("T", T), config.number("h", h)};
  if (config.has("alpha")) s.alphas = {config.number("alpha")};
  if (config.has("f")) s.subjects = {config.text("f")};
  if (config.has("rhs")) s.subjects = {config.text("rhs")};
  return s;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

double max_abs(const std::vector<double>& a) {
  double worst = 0.0;
  for (double v : a) worst = std::max(worst, std::fabs(v));
  return worst;
}

// --theorem 1: direct Prabhakar quadrature vs the Riemann-Liouville series.
std::vector<CrosscheckCase> prabhakar_series_check(const RunConfig& config) {
  const PrabhakarParams p{config.number("alpha", 0.5), config.number("beta", 1.0),
                          config.number("gamma", 1.0), config.number("omega", -1.0)};
  Settings s = settings(config, {p.alpha}, {"const1", "t", "t2", "sin"}, 5.0, 5e-3);
  const std::size_t n = step_count(0.0, s.T, s.h);
  const int terms = config.has("K")
                        ? static_cast<int>(config.integer("K", 0))
                        : prabhakar_series_terms(p, s.T, config.number("tol", 1e-12)).terms;
  std::vector<CrosscheckCase> out;
  for (const auto& name : s.subjects) {
    const auto g = builtin_function(name).sample(0.0, s.h, n);
    const auto direct = prabhakar_integral(g, p, 0.0);
    const auto series = prabhakar_integral_series(g, p, 0.0, terms);
    const double scale = std::max(max_abs(direct.values), 1e-300);
    out.push_back({name, p.alpha, max_abs_diff(direct.values, series.value.values) / scale, 1e-8});
  }
  return out;
}

// --theorem 2 and 3: the CF/ABC operators as scaled Prabhakar integrals of f'.
std::vector<CrosscheckCase> kernel_check(const RunConfig& config, bool abc) {
  Settings s = settings(config, abc ? std::vector<double>{0.3, 0.5, 0.7}
                                    : std::vector<double>{0.1, 0.5, 0.9},
                        builtin_function_names(), 5.0, 5e-3);
  const std::size_t n = step_count(0.0, s.T, s.h);
  std::vector<CrosscheckCase> out;
  for (double alpha : s.alphas) {
    const auto p = abc ? PrabhakarParams::from_abc_order(alpha) : PrabhakarParams::from_cf_order(alpha);
    for (const auto& name : s.subjects) {
      const auto g = builtin_function(name).sample(0.0, s.h, n);
      const auto direct = abc ? abc_derivative(g, alpha, {}, DerivativeSource::RequireSamples)
                              : cf_derivative(g, alpha, {}, DerivativeSource::RequireSamples);
      auto prabhakar = prabhakar_integral(g.with_values(*g.derivative), p, 0.0);
      for (auto& v : prabhakar.values) v /= 1.0 - alpha;
      out.push_back({name, alpha, max_abs_diff(direct.values, prabhakar.values), abc ? 1e-8 : 1e-10});
    }
  }
  return out;
}

// --theorem 4 and 5: the series in Riemann-Liouville integrals of f.
std::vector<CrosscheckCase> operator_series_check(const RunConfig& config, bool abc) {
  Settings s = settings(config, {0.1, 0.5, 0.9}, builtin_function_names(), 1.0, 1e-4);
  const std::size_t n = step_count(0.0, s.T, s.h);
  const double tol = config.number("tol", 1e-10);
  std::vector<CrosscheckCase> out;
  for (double alpha : s.alphas) {
    const int terms = config.has("K") ? static_cast<int>(config.integer("K", 0))
                      : abc           ? abc_series_terms(alpha, s.T, tol).terms
                                      : cf_series_terms(alpha, s.T, tol).terms;
    for (const auto& name : s.subjects) {
      const auto g = builtin_function(name).sample(0.0, s.h, n);
      const auto direct = abc ? abc_derivative(g, alpha, {}, DerivativeSource::RequireSamples)
                              : cf_derivative(g, alpha, {}, DerivativeSource::RequireSamples);
      const auto series = abc ? abc_series(g, alpha, {}, terms) : cf_series(g, alpha, {}, terms);
      out.push_back({name, alpha, max_abs_diff(direct.values, series.value.values), 1e-7});
    }
  }
  return out;
}

// --theorem 6 and 7: two solver paths for the same FDE.
std::vector<CrosscheckCase> solver_check(const RunConfig& config, bool abc) {
  Settings s = settings(config, {0.1, 0.5, 0.9}, builtin_rhs_names(), 5.0, 1e-3);
  std::vector<CrosscheckCase> out;
  for (double alpha : s.alphas) {
    for (const auto& name : s.subjects) {
      FDEProblem prob;
      prob.op.kind = abc ? OperatorKind::AbcDerivative : OperatorKind::CfDerivative;
      prob.op.order = alpha;
      prob.rhs = builtin_rhs(name);
      prob.y0 = config.number("y0", 1.0);
      prob.T = s.T;
      prob.h = s.h;
      const auto first = abc ? solve_abc_integral(prob) : solve_cf_ode(prob);
      const auto second = abc ? solve_abc_caputo_form(prob) : solve_cf_integral(prob);
      out.push_back({name, alpha, max_abs_diff(first.values, second.values), abc ? 1e-5 : 1e-6});
    }
  }
  return out;
}

}  // namespace

std::vector<CrosscheckCase> crosscheck(int theorem, const RunConfig& config) {
  switch (theorem) {
    case 1:
      return prabhakar_series_check(config);
    case 2:
      return kernel_check(config, false);
    case 3:
      return kernel_check(config, true);
    case 4:
      return operator_series_check(config, false);
    case 5:
      return operator_series_check(config, true);
    case 6:
      return solver_check(config, false);
    case 7:
      return solver_check(config, true);
    default:
      throw UsageError("--theorem must be one of 1..7, got " + std::to_string(theorem));
  }
}

}  // namespace prabhakar::cli
