#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "prabhakar/errors.hpp"
#include "prabhakar/fde.hpp"
#include "prabhakar/laplace.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/special_functions.hpp"
#include "test_support.hpp"

using namespace prabhakar;
using test_support::max_abs_diff;
using test_support::rel_err;

namespace {

Rhs decay() {
  return {[](double, double y) { return -y; }, [](double, double) { return 0.0; },
          [](double, double) { return -1.0; }};
}
Rhs constant_one() {
  return {[](double, double) { return 1.0; }, [](double, double) { return 0.0; },
          [](double, double) { return 0.0; }};
}
Rhs forced() {
  return {[](double t, double y) { return -y + std::sin(t); }, [](double t, double) { return std::cos(t); },
          [](double, double) { return -1.0; }};
}
Rhs zero() {
  return {[](double, double) { return 0.0; }, [](double, double) { return 0.0; },
          [](double, double) { return 0.0; }};
}

FDEProblem problem(OperatorKind kind, double alpha, Rhs rhs, double y0, double T, double h) {
  FDEProblem p;
  p.op.kind = kind;
  p.op.order = alpha;
  p.rhs = std::move(rhs);
  p.y0 = y0;
  p.T = T;
  p.h = h;
  return p;
}

double max_error(const Trajectory& tr, const std::function<double(double)>& exact) {
  double worst = 0.0;
  for (std::size_t i = 0; i < tr.size(); ++i) worst = std::max(worst, std::fabs(tr.values[i] - exact(tr.times[i])));
  return worst;
}

}  // namespace

TEST_CASE("zero right-hand side keeps y at y0 on every path") {
  const auto cf = problem(OperatorKind::CfDerivative, 0.5, zero(), 1.25, 1.0, 0.01);
  for (const auto& tr : {solve_cf_integral(cf), solve_cf_ode(cf)}) {
    for (double v : tr.values) CHECK(v == 1.25);
    CHECK(tr.initial_jump == 0.0);
  }
  const auto abc = problem(OperatorKind::AbcDerivative, 0.5, zero(), 1.25, 1.0, 0.01);
  for (const auto& tr : {solve_abc_integral(abc), solve_abc_caputo_form(abc)}) {
    for (double v : tr.values) CHECK(v == 1.25);
  }
  const auto cap = problem(OperatorKind::CaputoDerivative, 0.5, zero(), 1.25, 1.0, 0.01);
  for (double v : solve_caputo_adams(cap).values) CHECK(v == 1.25);
}

TEST_CASE("CF relaxation constant 2/3 is confirmed by Laplace inversion") {
  // y~(s) = M / ((M + 1 - a) s + a) with M = 1, a = 0.5
  for (double t : {1e-3, 0.5, 2.0, 5.0}) {
    const double numeric = laplace_invert({[](std::complex<double> s) { return 1.0 / (1.5 * s + 0.5); }, 0.0, t});
    CHECK(rel_err(numeric, 2.0 / 3.0 * std::exp(-t / 3.0)) <= 1e-10);
  }
}

TEST_CASE("CF solvers: relaxation, constant forcing and the decay rate") {
  const auto p = problem(OperatorKind::CfDerivative, 0.5, decay(), 1.0, 5.0, 1e-3);
  auto exact = [](double t) { return 2.0 / 3.0 * std::exp(-t / 3.0); };
  const auto integral = solve_cf_integral(p);
  const auto ode = solve_cf_ode(p);
  CHECK(integral.path == SolverPath::IntegralForm);
  CHECK(ode.path == SolverPath::OdeForm);
  CHECK(max_error(integral, exact) <= 1e-5);
  CHECK(max_error(ode, exact) <= 1e-5);
  CHECK(integral.initial_jump == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(max_abs_diff(integral.values, ode.values) <= 1e-6);

  const auto c = problem(OperatorKind::CfDerivative, 0.5, constant_one(), 0.0, 5.0, 1e-2);
  for (const auto& tr : {solve_cf_integral(c), solve_cf_ode(c)}) {
    CHECK(max_error(tr, [](double t) { return 0.5 + 0.5 * t; }) <= 1e-12);
  }

  // alpha = 0.9: y = (1/1.1) exp(-0.9 t / 1.1)
  const auto fast = problem(OperatorKind::CfDerivative, 0.9, decay(), 1.0, 5.0, 1e-3);
  auto exact_fast = [](double t) { return std::exp(-0.9 * t / 1.1) / 1.1; };
  CHECK(max_error(solve_cf_integral(fast), exact_fast) <= 1e-5);
  CHECK(max_error(solve_cf_ode(fast), exact_fast) <= 1e-5);
}

TEST_CASE("CF path equivalence on the linear test set") {
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (const auto& rhs : {decay(), constant_one(), forced()}) {
      const auto p = problem(OperatorKind::CfDerivative, alpha, rhs, 1.0, 5.0, 1e-3);
      CHECK(max_abs_diff(solve_cf_integral(p).values, solve_cf_ode(p).values) <= 1e-6);
    }
  }
}

TEST_CASE("ABC solvers: relaxation and constant forcing") {
  const auto p = problem(OperatorKind::AbcDerivative, 0.5, decay(), 1.0, 5.0, 1e-3);
  auto exact = [](double t) { return 2.0 / 3.0 * mittag_leffler(0.5, -std::sqrt(t) / 3.0); };
  const auto integral = solve_abc_integral(p);
  const auto caputo = solve_abc_caputo_form(p);
  CHECK(caputo.path == SolverPath::CaputoForm);
  CHECK(max_error(integral, exact) <= 1e-5);
  CHECK(max_error(caputo, exact) <= 1e-5);
  CHECK(max_abs_diff(integral.values, caputo.values) <= 1e-5);

  // the closed form agrees with inversion of y~ = B s^(a-1) / ((B + 1 - a) s^a + a)
  for (double t : {0.1, 1.0, 4.0}) {
    const double numeric = laplace_invert(
        {[](std::complex<double> s) { return std::pow(s, -0.5) / (1.5 * std::sqrt(s) + 0.5); }, 0.0, t});
    CHECK(rel_err(numeric, exact(t)) <= 1e-10);
  }

  const auto c = problem(OperatorKind::AbcDerivative, 0.5, constant_one(), 0.0, 2.0, 1e-2);
  auto exact_c = [](double t) { return 0.5 + 0.5 * std::sqrt(t) / gamma_fn(1.5); };
  const auto ci = solve_abc_integral(c);
  const auto cc = solve_abc_caputo_form(c);
  CHECK(max_error(ci, exact_c) <= 1e-12);
  CHECK(max_error(cc, exact_c) <= 1e-12);
  CHECK(max_abs_diff(ci.values, cc.values) <= 1e-13);
}

TEST_CASE("ABC path equivalence on the linear test set") {
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (const auto& rhs : {decay(), constant_one(), forced()}) {
      const auto p = problem(OperatorKind::AbcDerivative, alpha, rhs, 1.0, 5.0, 1e-3);
      CHECK(max_abs_diff(solve_abc_integral(p).values, solve_abc_caputo_form(p).values) <= 1e-5);
    }
  }
}

TEST_CASE("Caputo Adams solver examples") {
  const auto p = problem(OperatorKind::CaputoDerivative, 0.5, decay(), 1.0, 5.0, 1e-3);
  const auto tr = solve_caputo_adams(p);
  CHECK(tr.path == SolverPath::Adams);
  CHECK(max_error(tr, [](double t) { return mittag_leffler(0.5, -std::sqrt(t)); }) <= 5e-4);

  const auto ramp = problem(OperatorKind::CaputoDerivative, 0.5,
                            {[](double t, double) { return t; }, nullptr, nullptr}, 0.0, 2.0, 1e-2);
  CHECK(max_error(solve_caputo_adams(ramp), [](double t) { return monomial_rl(1.0, 0.5, t); }) <= 1e-12);
}

TEST_CASE("solved trajectories reproduce F through the operators") {
  SUBCASE("CF") {
    const double alpha = 0.5;
    const auto p = problem(OperatorKind::CfDerivative, alpha, forced(), 1.0, 3.0, 1e-3);
    const auto tr = solve_cf_integral(p);
    GridFunction y;
    y.h = p.h;
    y.values = tr.values;
    y.smoothness = Smoothness::AC;
    const auto d = cf_derivative(y, alpha);
    const double lambda = alpha / (1 - alpha);
    for (std::size_t i = 100; i < tr.size(); i += 97) {
      const double t = tr.times[i];
      // the jump at 0+ contributes (M/(1-a)) jump exp(-lambda t)
      const double lhs = d.values[i] + tr.initial_jump / (1 - alpha) * std::exp(-lambda * t);
      CHECK(std::fabs(lhs - p.rhs(t, tr.values[i])) <= 1e-5);
    }
  }
  SUBCASE("ABC") {
    // y ~ sqrt(t) at 0, so the synthesized y' limits agreement to O(sqrt h)
    const double alpha = 0.5;
    const double lambda = alpha / (1 - alpha);
    auto discrepancy = [&](double h) {
      const auto p = problem(OperatorKind::AbcDerivative, alpha, decay(), 1.0, 3.0, h);
      const auto tr = solve_abc_integral(p);
      GridFunction y;
      y.h = p.h;
      y.values = tr.values;
      y.smoothness = Smoothness::AC;
      const auto d = abc_derivative(y, alpha);
      double worst = 0.0;
      for (double t : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        const auto i = static_cast<std::size_t>(std::lround(t / h));
        const double lhs =
            d.values[i] + tr.initial_jump / (1 - alpha) * mittag_leffler(alpha, -lambda * std::sqrt(t));
        worst = std::max(worst, std::fabs(lhs - p.rhs(t, tr.values[i])));
      }
      return worst;
    };
    const double coarse = discrepancy(2e-3);
    const double fine = discrepancy(1e-3);
    CHECK(fine <= 2e-3);
    CHECK(fine <= 0.8 * coarse);
  }
}

TEST_CASE("convergence orders under step halving") {
  SUBCASE("CF integral form is second order") {
    auto exact = [](double t) { return 2.0 / 3.0 * std::exp(-t / 3.0); };
    double previous = 0.0;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
      const double err = max_error(solve_cf_integral(problem(OperatorKind::CfDerivative, 0.5, decay(), 1, 5, h)), exact);
      if (previous > 0.0) CHECK(previous / err >= 3.5);
      previous = err;
    }
  }
  SUBCASE("CF ODE form converges at least at second order") {
    auto exact = [](double t) { return 2.0 / 3.0 * std::exp(-t / 3.0); };
    const double coarse = max_error(solve_cf_ode(problem(OperatorKind::CfDerivative, 0.5, decay(), 1, 5, 0.5)), exact);
    const double fine = max_error(solve_cf_ode(problem(OperatorKind::CfDerivative, 0.5, decay(), 1, 5, 0.25)), exact);
    CHECK(coarse / fine >= 3.5);
  }
  SUBCASE("Adams is order 1 + alpha on a smooth solution") {
    const double alpha = 0.5;
    const double g = gamma_fn(3 - alpha);
    const Rhs rhs{[=](double t, double y) { return 2 * std::pow(t, 2 - alpha) / g + t * t - y; }, nullptr, nullptr};
    const double target = std::pow(2.0, 1 + alpha);
    double previous = 0.0;
    for (double h : {1.0 / 40, 1.0 / 80, 1.0 / 160}) {
      const auto tr = solve_caputo_adams(problem(OperatorKind::CaputoDerivative, alpha, rhs, 0.0, 1.0, h));
      const double err = max_error(tr, [](double t) { return t * t; });
      if (previous > 0.0) {
        const double ratio = previous / err;
        CHECK(ratio >= 0.8 * target);
        CHECK(ratio <= 1.2 * target);
      }
      previous = err;
    }
  }
}

TEST_CASE("solver errors") {
  auto p = problem(OperatorKind::CfDerivative, 0.5, decay(), 1.0, 1.0, 0.1);
  p.rhs.dt = nullptr;
  CHECK_THROWS_AS(solve_cf_ode(p), PreconditionError);
  CHECK_THROWS_AS(solve_abc_integral(p), DomainError);

  // y = y0 - 100 c1 y is not contractive even with relaxation
  const auto stiff = problem(OperatorKind::CfDerivative, 0.5,
                             {[](double, double y) { return -100 * y; }, nullptr, nullptr}, 1.0, 1.0, 0.1);
  try {
    solve_cf_integral(stiff);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.residual() > 0.0);
  }

  // alternating but contractive after relaxation: slope -0.9
  const auto damped = problem(OperatorKind::CfDerivative, 0.1, decay(), 1.0, 1.0, 0.01);
  const auto tr = solve_cf_integral(damped);
  CHECK(tr.max_iterations <= 50);
  CHECK(tr.values[0] == doctest::Approx(1.0 / 1.9).epsilon(1e-12));

  auto bad = problem(OperatorKind::CfDerivative, 0.5, decay(), 1.0, 1.0, 0.3);
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad.h = 2.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = problem(OperatorKind::RlIntegral, 0.5, decay(), 1.0, 1.0, 0.1);
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("monomial_rl") {
  CHECK(monomial_rl(2, 0.5, 1.0) == doctest::Approx(2 / gamma_fn(3.5)));
  CHECK(monomial_rl(-0.5, 0.5, 3.0) == doctest::Approx(gamma_fn(0.5)));
  CHECK_THROWS_AS(monomial_rl(-1.0, 0.5, 1.0), DomainError);
}
