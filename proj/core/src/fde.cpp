#include "prabhakar/fde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "prabhakar/errors.hpp"

namespace prabhakar {
namespace {

struct FixedPointResult {
  double y = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Solves y = g(y). Plain iteration until the corrections start alternating
// without shrinking fast, then under-relaxed iteration.
FixedPointResult fixed_point(const std::function<double(double)>& g, double start,
                             const FixedPointOptions& opts, double t) {
  double y = start;
  double previous = 0.0;
  bool relaxed = false;
  double delta = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const double gy = g(y);
    delta = gy - y;
    if (!std::isfinite(gy)) break;
    if (std::fabs(delta) <= opts.tol * std::max(1.0, std::fabs(gy))) {
      return {gy, std::fabs(delta), it};
    }
    if (!relaxed && it > 1 && delta * previous < 0.0 &&
        std::fabs(delta) > 0.3 * std::fabs(previous)) {
      relaxed = true;
    }
    y += (relaxed ? opts.relaxation : 1.0) * delta;
    previous = delta;
  }
  std::ostringstream os;
  os << "fixed-point iteration did not converge at t = " << t << " after "
     << opts.max_iterations << " iterations (last correction " << std::fabs(delta) << ")";
  throw SolverError(os.str(), std::fabs(delta));
}

void require_kind(const FDEProblem& prob, OperatorKind kind, const char* solver) {
  prob.validate();
  if (prob.op.kind != kind) throw DomainError(std::string(solver) + ": operator kind mismatch");
}

Trajectory make_trajectory(const FDEProblem& prob, SolverPath path) {
  Trajectory out;
  out.path = path;
  const std::size_t n = prob.steps() + 1;
  out.times.resize(n);
  out.values.assign(n, 0.0);
  out.residuals.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out.times[i] = static_cast<double>(i) * prob.h;
  return out;
}

// Product-trapezoidal sum for step n without the F_n term.
double history(const ConvolutionWeights& w, const std::vector<double>& f, std::size_t n) {
  double sum = 0.0;
  for (std::size_t m = 1; m <= n; ++m) sum += f[n - m] * w.mu1[m - 1];
  for (std::size_t m = 2; m <= n; ++m) sum += f[n - m + 1] * (w.mu0[m - 1] - w.mu1[m - 1]);
  return sum;
}

// Rectangle rule: F held at the left end of every subinterval.
double rectangle(const ConvolutionWeights& w, const std::vector<double>& f, std::size_t n) {
  double sum = 0.0;
  for (std::size_t m = 1; m <= n; ++m) sum += f[n - m] * w.mu0[m - 1];
  return sum;
}

// nu_n = int_0^h (t_n - tau)^(alpha-1)/Gamma(alpha) (tau/h)^alpha dtau, n = 1..N: the
// first-panel weight of F_1 when F is interpolated by F_0 + (F_1 - F_0)(tau/h)^alpha,
// which follows the t^alpha start of the solution instead of a straight line.
std::vector<double> singular_start_weights(double alpha, double h, std::size_t intervals) {
  std::vector<double> nu(intervals);
  const double scale = std::pow(h, alpha) / gamma_fn(alpha);
  for (std::size_t n = 1; n <= intervals; ++n) {
    if (n == 1) {
      nu[0] = std::pow(h, alpha) * gamma_fn(alpha + 1.0) / gamma_fn(2.0 * alpha + 1.0);
      continue;
    }
    // (n - u)^(alpha-1) = n^(alpha-1) sum_k (1-alpha)_k / k! (u/n)^k
    const double inv_n = 1.0 / static_cast<double>(n);
    double coefficient = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double term = coefficient / (alpha + k + 1.0);
      sum += term;
      if (term < 1e-17 * sum) break;
      coefficient *= (1.0 - alpha + k) / (k + 1.0) * inv_n;
    }
    nu[n - 1] = scale * std::pow(static_cast<double>(n), alpha - 1.0) * sum;
  }
  return nu;
}

// Product-trapezoidal J^alpha weights with the first panel replaced by the
// (tau/h)^alpha interpolant: J^alpha F at t_n = known(n) + current(n) F_n.
class StartCorrectedRl {
 public:
  StartCorrectedRl(double alpha, double h, std::size_t intervals)
      : w_(rl_weights(alpha, h, intervals)), delta_(singular_start_weights(alpha, h, intervals)) {
    for (std::size_t n = 1; n <= intervals; ++n) delta_[n - 1] -= w_.mu0[n - 1] - w_.mu1[n - 1];
  }

  const ConvolutionWeights& weights() const { return w_; }

  double known(const std::vector<double>& f, std::size_t n) const {
    const double first = n == 1 ? -f[0] : f[1] - f[0];
    return history(w_, f, n) + delta_[n - 1] * first;
  }

  double current(std::size_t n) const { return w_.endpoint() + (n == 1 ? delta_[0] : 0.0); }

 private:
  ConvolutionWeights w_;
  std::vector<double> delta_;  // nu_n minus the trapezoidal first-panel weight of F_1
};

// y(0+) after the jump: y = y0 + c1 F(0, y).
double initial_value(const FDEProblem& prob, double c1, const FixedPointOptions& opts,
                     Trajectory& out) {
  const auto r = fixed_point([&](double y) { return prob.y0 + c1 * prob.rhs(0.0, y); }, prob.y0,
                             opts, 0.0);
  out.values[0] = r.y;
  out.residuals[0] = r.residual;
  out.initial_jump = r.y - prob.y0;
  out.max_iterations = std::max(out.max_iterations, r.iterations);
  return r.y;
}

}  // namespace

void FDEProblem::validate() const {
  op.validate();
  if (op.kind != OperatorKind::CfDerivative && op.kind != OperatorKind::AbcDerivative &&
      op.kind != OperatorKind::CaputoDerivative) {
    throw DomainError("FDE operator must be a CF, ABC or Caputo derivative");
  }
  if (!rhs.value) throw PreconditionError("FDE right-hand side is missing");
  if (!std::isfinite(y0)) throw DomainError("initial value must be finite");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("horizon T must be > 0");
  if (!(h > 0.0) || h > T) throw DomainError("step h must satisfy 0 < h <= T");
  step_count(0.0, T, h);
}

std::size_t FDEProblem::steps() const { return step_count(0.0, T, h); }

const char* to_string(SolverPath path) {
  switch (path) {
    case SolverPath::OdeForm:
      return "ode";
    case SolverPath::IntegralForm:
      return "integral";
    case SolverPath::CaputoForm:
      return "caputo";
    case SolverPath::Adams:
      return "adams";
  }
  return "unknown";
}

double monomial_rl(double p, double sigma, double t) {
  if (!(p > -1.0)) throw DomainError("monomial rule needs p > -1");
  if (!(sigma > 0.0)) throw DomainError("monomial rule needs sigma > 0");
  if (t < 0.0) throw DomainError("monomial rule needs t >= 0");
  return gamma_fn(p + 1.0) / gamma_fn(p + sigma + 1.0) * std::pow(t, p + sigma);
}

Trajectory solve_cf_integral(const FDEProblem& prob, const FixedPointOptions& opts) {
  require_kind(prob, OperatorKind::CfDerivative, "solve_cf_integral");
  const double alpha = prob.op.order;
  const double m = prob.op.norm(alpha);
  const double c1 = (1.0 - alpha) / m;
  const double c2 = alpha / m;
  const double h = prob.h;

  Trajectory out = make_trajectory(prob, SolverPath::IntegralForm);
  const double y_start = initial_value(prob, c1, opts, out);
  double f_prev = prob.rhs(0.0, y_start);
  double memory = 0.0;  // int_0^{t_{n-1}} F
  for (std::size_t n = 1; n < out.size(); ++n) {
    const double t = out.times[n];
    const double base = prob.y0 + c2 * (memory + 0.5 * h * f_prev);
    const double c = c1 + 0.5 * h * c2;
    const auto r = fixed_point([&](double y) { return base + c * prob.rhs(t, y); },
                               out.values[n - 1], opts, t);
    out.values[n] = r.y;
    out.residuals[n] = r.residual;
    out.max_iterations = std::max(out.max_iterations, r.iterations);
    const double f = prob.rhs(t, r.y);
    memory += 0.5 * h * (f_prev + f);
    f_prev = f;
  }
  return out;
}

Trajectory solve_cf_ode(const FDEProblem& prob, const FixedPointOptions& opts) {
  require_kind(prob, OperatorKind::CfDerivative, "solve_cf_ode");
  if (!prob.rhs.differentiable()) {
    throw PreconditionError("solve_cf_ode needs dF/dt and dF/dy of the right-hand side");
  }
  const double alpha = prob.op.order;
  const double m = prob.op.norm(alpha);
  const double c1 = (1.0 - alpha) / m;
  const double c2 = alpha / m;
  const double h = prob.h;

  auto slope = [&](double t, double y) {
    const double denominator = 1.0 - c1 * prob.rhs.dy(t, y);
    if (std::fabs(denominator) < 1e-14) {
      std::ostringstream os;
      os << "solve_cf_ode: 1 - c1 dF/dy vanishes at t = " << t;
      throw SolverError(os.str(), std::numeric_limits<double>::infinity());
    }
    return (c1 * prob.rhs.dt(t, y) + c2 * prob.rhs(t, y)) / denominator;
  };

  Trajectory out = make_trajectory(prob, SolverPath::OdeForm);
  double y = initial_value(prob, c1, opts, out);
  double f_prev = prob.rhs(0.0, y);
  double memory = 0.0;
  for (std::size_t n = 1; n < out.size(); ++n) {
    const double t = out.times[n - 1];
    const double k1 = slope(t, y);
    const double k2 = slope(t + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = slope(t + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = slope(t + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(y)) {
      throw SolverError("solve_cf_ode: trajectory became non-finite",
                        std::numeric_limits<double>::infinity());
    }
    out.values[n] = y;
    // defect of the integral form with trapezoidal memory
    const double f = prob.rhs(out.times[n], y);
    memory += 0.5 * h * (f_prev + f);
    f_prev = f;
    out.residuals[n] = std::fabs(y - (prob.y0 + c1 * f + c2 * memory));
  }
  return out;
}

Trajectory solve_abc_integral(const FDEProblem& prob, const FixedPointOptions& opts) {
  require_kind(prob, OperatorKind::AbcDerivative, "solve_abc_integral");
  const double alpha = prob.op.order;
  const double b = prob.op.norm(alpha);
  const double c1 = (1.0 - alpha) / b;
  const double c2 = alpha / b;

  Trajectory out = make_trajectory(prob, SolverPath::IntegralForm);
  const StartCorrectedRl rl(alpha, prob.h, out.size() - 1);
  std::vector<double> f(out.size(), 0.0);
  f[0] = prob.rhs(0.0, initial_value(prob, c1, opts, out));
  for (std::size_t n = 1; n < out.size(); ++n) {
    const double t = out.times[n];
    const double base = prob.y0 + c2 * rl.known(f, n);
    const double c = c1 + c2 * rl.current(n);
    const auto r = fixed_point([&](double y) { return base + c * prob.rhs(t, y); },
                               out.values[n - 1], opts, t);
    out.values[n] = r.y;
    out.residuals[n] = r.residual;
    out.max_iterations = std::max(out.max_iterations, r.iterations);
    f[n] = prob.rhs(t, r.y);
  }
  return out;
}

Trajectory solve_abc_caputo_form(const FDEProblem& prob, const FixedPointOptions& opts) {
  require_kind(prob, OperatorKind::AbcDerivative, "solve_abc_caputo_form");
  const double alpha = prob.op.order;
  const double b = prob.op.norm(alpha);
  const double c1 = (1.0 - alpha) / b;
  const double c2 = alpha / b;
  const double f0 = prob.rhs(0.0, prob.y0);
  const double singular_scale = 1.0 / gamma_fn(1.0 - alpha);
  // image of the t^-alpha / Gamma(1 - alpha) source term under J^alpha
  auto source_image = [&](double t) { return singular_scale * monomial_rl(-alpha, alpha, t); };

  Trajectory out = make_trajectory(prob, SolverPath::CaputoForm);
  const StartCorrectedRl rl(alpha, prob.h, out.size() - 1);
  std::vector<double> f(out.size(), 0.0);

  {
    const double offset = prob.y0 - c1 * f0 + c1 * f0 * source_image(0.0);
    const auto r = fixed_point([&](double y) { return offset + c1 * prob.rhs(0.0, y); },
                               prob.y0, opts, 0.0);
    out.values[0] = r.y;
    out.residuals[0] = r.residual;
    out.initial_jump = r.y - prob.y0;
    out.max_iterations = r.iterations;
    f[0] = prob.rhs(0.0, r.y);
  }

  for (std::size_t n = 1; n < out.size(); ++n) {
    const double t = out.times[n];
    const double offset = prob.y0 - c1 * f0 + c1 * f0 * source_image(t);
    const double predicted = offset + c1 * f[n - 1] + c2 * rectangle(rl.weights(), f, n);
    const double base = offset + c2 * rl.known(f, n);
    const double c = c2 * rl.current(n);
    const auto r = fixed_point(
        [&](double y) {
          const double fy = prob.rhs(t, y);
          return base + c1 * fy + c * fy;
        },
        predicted, opts, t);
    out.values[n] = r.y;
    out.residuals[n] = r.residual;
    out.max_iterations = std::max(out.max_iterations, r.iterations);
    f[n] = prob.rhs(t, r.y);
  }
  return out;
}

Trajectory solve_caputo_adams(const FDEProblem& prob) {
  require_kind(prob, OperatorKind::CaputoDerivative, "solve_caputo_adams");
  const double alpha = prob.op.order;

  Trajectory out = make_trajectory(prob, SolverPath::Adams);
  const auto w = rl_weights(alpha, prob.h, out.size() - 1);
  std::vector<double> f(out.size(), 0.0);
  out.values[0] = prob.y0;
  f[0] = prob.rhs(0.0, prob.y0);
  for (std::size_t n = 1; n < out.size(); ++n) {
    const double t = out.times[n];
    const double predicted = prob.y0 + rectangle(w, f, n);
    const double corrected =
        prob.y0 + history(w, f, n) + w.endpoint() * prob.rhs(t, predicted);
    if (!std::isfinite(corrected)) {
      throw SolverError("solve_caputo_adams: trajectory became non-finite",
                        std::numeric_limits<double>::infinity());
    }
    out.values[n] = corrected;
    out.residuals[n] = std::fabs(corrected - predicted);
    f[n] = prob.rhs(t, corrected);
  }
  out.max_iterations = 1;
  return out;
}

Trajectory solve(const FDEProblem& prob, SolverPath path, const FixedPointOptions& opts) {
  switch (path) {
    case SolverPath::OdeForm:
      return solve_cf_ode(prob, opts);
    case SolverPath::IntegralForm:
      if (prob.op.kind == OperatorKind::AbcDerivative) return solve_abc_integral(prob, opts);
      return solve_cf_integral(prob, opts);
    case SolverPath::CaputoForm:
      return solve_abc_caputo_form(prob, opts);
    case SolverPath::Adams:
      return solve_caputo_adams(prob);
  }
  throw DomainError("unknown solver path");
}

}  // namespace prabhakar
