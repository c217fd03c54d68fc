#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "prabhakar/operators.hpp"

namespace prabhakar {

/// Right-hand side F(t, y) with optional partial derivatives.
struct Rhs {
  std::function<double(double, double)> value;
  std::function<double(double, double)> dt;  ///< dF/dt
  std::function<double(double, double)> dy;  ///< dF/dy

  double operator()(double t, double y) const { return value(t, y); }
  bool differentiable() const { return static_cast<bool>(dt) && static_cast<bool>(dy); }
};

/// D^alpha y = F(t, y) on [0, T] with y(0+) = y0, D given by op (CF, ABC or Caputo).
struct FDEProblem {
  OperatorSpec op;
  Rhs rhs;
  double y0 = 0.0;
  double T = 1.0;
  double h = 1e-3;

  void validate() const;
  std::size_t steps() const;
};

enum class SolverPath { OdeForm, IntegralForm, CaputoForm, Adams };

const char* to_string(SolverPath path);

struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  /// Per-step residual of the final nonlinear iterate (|y - y_predicted| for Adams).
  std::vector<double> residuals;
  SolverPath path = SolverPath::IntegralForm;
  /// y at the first grid point minus the prescribed y0. Non-zero for the CF
  /// and ABC operators whenever F(0, .) != 0.
  double initial_jump = 0.0;
  /// Largest number of fixed-point iterations spent on one step.
  int max_iterations = 0;

  std::size_t size() const { return values.size(); }
};

struct FixedPointOptions {
  double tol = 1e-12;
  int max_iterations = 50;
  /// Relaxation factor used once successive corrections alternate in sign
  /// and shrink by less than a factor ~3.
  double relaxation = 0.5;
};

/// y = y0 + ((1-alpha)/M) F(t, y) + (alpha/M) int_0^t F, trapezoidal memory.
/// The first grid value solves y = y0 + ((1-alpha)/M) F(0, y).
Trajectory solve_cf_integral(const FDEProblem& prob, const FixedPointOptions& opts = {});

/// y' = ((1-alpha)/M) dF/dt + (alpha/M) F for t > 0 after the initial jump,
/// written as y' = (c1 F_t + c2 F) / (1 - c1 F_y) and stepped with RK4.
/// Needs rhs.dt and rhs.dy.
Trajectory solve_cf_ode(const FDEProblem& prob, const FixedPointOptions& opts = {});

/// y = y0 + ((1-alpha)/B) F(t, y) + (alpha/B) J^alpha F, product-trapezoidal memory.
Trajectory solve_abc_integral(const FDEProblem& prob, const FixedPointOptions& opts = {});

/// The Caputo-type form of the ABC equation integrated once by J^alpha:
///   y = y0 + c1 (F - F0) + c2 J^alpha F + c1 F0 J^alpha[t^-alpha / Gamma(1-alpha)],
/// with F0 = F(0, y0). Each step is a rectangle-rule predictor followed by
/// product-trapezoidal corrections iterated to the fixed-point tolerance.
Trajectory solve_abc_caputo_form(const FDEProblem& prob, const FixedPointOptions& opts = {});

/// Fractional Adams-Bashforth-Moulton (PECE) scheme for the Caputo equation
/// y = y0 + J^alpha F.
Trajectory solve_caputo_adams(const FDEProblem& prob);

/// Dispatches on path; throws DomainError if the path does not fit op.kind.
Trajectory solve(const FDEProblem& prob, SolverPath path, const FixedPointOptions& opts = {});

/// J^sigma t^p = Gamma(p+1)/Gamma(p+sigma+1) t^(p+sigma), p > -1.
double monomial_rl(double p, double sigma, double t);

}  // namespace prabhakar
