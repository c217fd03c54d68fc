#include <doctest.h>

#include <cmath>
#include <vector>

#include "prabhakar/errors.hpp"
#include "prabhakar/grid_function.hpp"
#include "prabhakar/normalization.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/special_functions.hpp"
#include "test_support.hpp"

using namespace prabhakar;
using test_support::max_abs_diff;
using test_support::rel_err;

namespace {

GridFunction constant(double c, double h, std::size_t n) {
  return GridFunction::sample([c](double) { return c; }, [](double) { return 0.0; }, 0.0, h, n);
}
GridFunction linear(double h, std::size_t n) {
  return GridFunction::sample([](double t) { return t; }, [](double) { return 1.0; }, 0.0, h, n);
}
GridFunction square(double h, std::size_t n) {
  return GridFunction::sample([](double t) { return t * t; }, [](double t) { return 2 * t; }, 0.0, h, n);
}
GridFunction sine(double h, std::size_t n) {
  return GridFunction::sample([](double t) { return std::sin(t); }, [](double t) { return std::cos(t); },
                              0.0, h, n);
}

double monomial(double p, double sigma, double t) {
  return gamma_fn(p + 1) / gamma_fn(p + sigma + 1) * std::pow(t, p + sigma);
}

}  // namespace

TEST_CASE("GridFunction validation and sampling") {
  const auto f = square(0.1, 10);
  CHECK(f.size() == 11);
  CHECK(f.end() == doctest::Approx(1.0));
  CHECK(f.smoothness == Smoothness::AC);
  GridFunction bad = f;
  bad.values[3] = NAN;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  GridFunction single = f.with_values({1.0});
  CHECK_THROWS_AS(single.validate(), DomainError);
  CHECK(step_count(0.0, 5.0, 5e-3) == 1000);
  CHECK_THROWS_AS(step_count(0.0, 1.0, 0.3), DomainError);
  // finite differences are exact for quadratics
  const auto d = finite_difference_derivative(square(0.1, 10));
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == doctest::Approx(0.2 * i).epsilon(1e-12));
}

TEST_CASE("NormalizationFn") {
  CHECK(NormalizationFn{}(0.3) == 1.0);
  const auto table = NormalizationFn::table({{0, 1}, {0.5, 2}, {1, 1}});
  CHECK(table(0.25) == doctest::Approx(1.5));
  CHECK(table(1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(NormalizationFn::table({{0, 1}, {1, 1.1}}), DomainError);
  CHECK_THROWS_AS(NormalizationFn::table({{0.1, 1}, {1, 1}}), DomainError);
}

TEST_CASE("rl_integral: monomial rule") {
  for (double sigma : {0.3, 0.5, 1.0, 2.7}) {
    const auto one = rl_integral(constant(1.0, 0.01, 200), sigma);
    CHECK(one.values[0] == 0.0);
    for (std::size_t i = 1; i < one.size(); i += 17) {
      CHECK(rel_err(one.values[i], monomial(0, sigma, one.time(i))) <= 1e-13);
    }
    // piecewise-linear input is integrated exactly
    const auto lin = rl_integral(linear(0.01, 200), sigma);
    for (std::size_t i = 1; i < lin.size(); i += 17) {
      CHECK(rel_err(lin.values[i], monomial(1, sigma, lin.time(i))) <= 1e-12);
    }
  }
  const auto sq = rl_integral(square(1e-3, 1000), 0.5);
  CHECK(sq.values.back() == doctest::Approx(0.6018).epsilon(1e-4));
  CHECK(std::fabs(sq.values.back() - monomial(2, 0.5, 1.0)) <= 1e-6);
  CHECK_THROWS_AS(rl_integral(linear(0.1, 10), 0.0), DomainError);
}

TEST_CASE("rl_integral: semigroup up to discretization error") {
  for (auto [s1, s2] : {std::pair{0.3, 0.4}, std::pair{0.5, 1.5}, std::pair{1.0, 1.0}}) {
    auto gap = [&](double h, std::size_t n) {
      const auto f = sine(h, n);
      return max_abs_diff(rl_integral(rl_integral(f, s1), s2).values, rl_integral(f, s1 + s2).values);
    };
    const double coarse = gap(4e-3, 500);
    const double fine = gap(2e-3, 1000);
    INFO("s1 = " << s1 << ", s2 = " << s2);
    CHECK(fine <= 2e-6);
    // J^s1 sin ~ t^(1+s1) at 0 limits the order below 2 for fractional s1
    CHECK(coarse / fine >= 3.0);
  }
}

TEST_CASE("shift identity: J^(k+1) f' = J^k f - f(a) t^k / k!") {
  const auto f = GridFunction::sample([](double t) { return std::cos(t) + 2; },
                                      [](double t) { return -std::sin(t); }, 0.0, 2e-3, 1000);
  const auto df = f.with_values(*f.derivative);
  for (int k = 1; k <= 3; ++k) {
    const auto lhs = rl_integral(df, k + 1);
    const auto rhs = rl_integral(f, k);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double expected = rhs.values[i] - f.values[0] * std::pow(f.time(i), k) / std::tgamma(k + 1);
      worst = std::max(worst, std::fabs(lhs.values[i] - expected));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("caputo_derivative examples") {
  CHECK(max_abs_diff(caputo_derivative(constant(3.0, 0.01, 100), 0.4).values,
                     std::vector<double>(101, 0.0)) == 0.0);
  const auto lin = caputo_derivative(linear(0.01, 100), 0.5);
  for (std::size_t i = 1; i < lin.size(); i += 9) {
    CHECK(rel_err(lin.values[i], std::sqrt(lin.time(i)) / gamma_fn(1.5)) <= 1e-12);
  }
  const auto sq = caputo_derivative(square(1e-3, 1000), 0.5);
  CHECK(rel_err(sq.values.back(), 2 / gamma_fn(2.5)) <= 1e-12);
}

TEST_CASE("derivative source handling") {
  auto f = square(1e-2, 100);
  f.derivative.reset();
  CHECK_THROWS_AS(caputo_derivative(f, 0.5, DerivativeSource::RequireSamples), PreconditionError);
  const auto synthesized = caputo_derivative(f, 0.5);
  CHECK(synthesized.synthesized_derivative);
  CHECK(rel_err(synthesized.values.back(), 2 / gamma_fn(2.5)) <= 1e-10);
  f.smoothness = Smoothness::L1;
  CHECK_THROWS_AS(cf_derivative(f, 0.5), PreconditionError);
}

TEST_CASE("cf_derivative examples") {
  const auto zero = cf_derivative(constant(2.0, 0.01, 100), 0.3);
  for (double v : zero.values) CHECK(v == 0.0);
  // f = t: (M/(1-a)) (1 - exp(-lambda t)) / lambda, lambda = a/(1-a)
  for (double alpha : {0.2, 0.5, 0.8}) {
    const auto out = cf_derivative(linear(0.01, 300), alpha);
    const double lambda = alpha / (1 - alpha);
    for (std::size_t i = 0; i < out.size(); i += 13) {
      const double want = -std::expm1(-lambda * out.time(i)) / lambda / (1 - alpha);
      CHECK(std::fabs(out.values[i] - want) <= 1e-13);
    }
  }
  CHECK(cf_derivative(linear(0.01, 100), 0.5).values.back() ==
        doctest::Approx(2 * (1 - std::exp(-1.0))).epsilon(1e-13));
  CHECK_THROWS_AS(cf_derivative(linear(0.1, 10), 1.0), DomainError);
}

TEST_CASE("CF and ABC operators are scaled Prabhakar integrals of f'") {
  for (double alpha : {0.1, 0.5, 0.9}) {
    const auto f = sine(5e-3, 1000);
    const auto direct = cf_derivative(f, alpha);
    auto via = prabhakar_integral(f.with_values(*f.derivative), PrabhakarParams::from_cf_order(alpha), 0.0);
    for (double& v : via.values) v /= 1 - alpha;
    CHECK(max_abs_diff(direct.values, via.values) <= 1e-10);
  }
  for (double alpha : {0.3, 0.7}) {
    const auto f = square(1e-2, 300);
    const auto direct = abc_derivative(f, alpha);
    auto via = prabhakar_integral(f.with_values(*f.derivative), PrabhakarParams::from_abc_order(alpha), 0.0);
    for (double& v : via.values) v /= 1 - alpha;
    CHECK(max_abs_diff(direct.values, via.values) <= 1e-8);
  }
}

TEST_CASE("abc_derivative: constants vanish, small-t growth follows the series") {
  for (double v : abc_derivative(constant(1.0, 0.01, 100), 0.5).values) CHECK(v == 0.0);
  // f = t: (B/(1-a)) t E_{a,2}(-lambda t^a)
  const auto out = abc_derivative(linear(1e-3, 500), 0.5);
  for (std::size_t i = 1; i < out.size(); i += 50) {
    const double t = out.time(i);
    const double want = 2 * t * prabhakar_function({0.5, 2, 1}, -std::sqrt(t));
    CHECK(rel_err(out.values[i], want) <= 1e-10);
  }
}

TEST_CASE("prabhakar_integral: closed forms") {
  const auto one = constant(1.0, 0.01, 200);
  const auto flat = prabhakar_integral(one, {1, 1, 1, 0}, 0.0);
  for (std::size_t i = 0; i < one.size(); i += 11) CHECK(flat.values[i] == doctest::Approx(one.time(i)));
  const auto decay = prabhakar_integral(one, {1, 1, 1, -0.7}, 0.0);
  for (std::size_t i = 0; i < one.size(); i += 11) {
    CHECK(std::fabs(decay.values[i] - std::expm1(-0.7 * one.time(i)) / -0.7) <= 1e-13);
  }
  // int kernel = t^b E^g_{a,b+1}(w t^a); int kernel * tau = t^(b+1) E^g_{a,b+2}(w t^a)
  struct Case {
    PrabhakarParams p;
    double want_one, want_t;
  };
  const Case cases[] = {{{0.5, 0.5, 1, -1}, 0.66379599755365878715, 1.0680268759479280754},
                        {{0.7, 1.3, 2, -0.8}, 0.590102385211706041, 0.68636610903789752916}};
  for (const auto& c : cases) {
    CHECK(rel_err(prabhakar_integral(constant(1.0, 0.01, 200), c.p, 0.0).values.back(), c.want_one) <= 1e-8);
    CHECK(rel_err(prabhakar_integral(linear(0.01, 200), c.p, 0.0).values.back(), c.want_t) <= 1e-8);
  }
  CHECK_THROWS_AS(prabhakar_integral(one, {1, 1, 1, 0}, 0.5), DomainError);
  CHECK_THROWS_AS(prabhakar_integral(one, {-1, 1, 1, 0}, 0.0), DomainError);
}

TEST_CASE("prabhakar_integral_series") {
  const auto f = square(5e-3, 1000);
  const PrabhakarParams p{0.5, 1, 1, -1};
  const auto k0 = prabhakar_integral_series(f, p, 0.0, 0);
  CHECK(max_abs_diff(k0.value.values, rl_integral(f, p.beta).values) == 0.0);

  const auto k = prabhakar_series_terms(p, 5.0, 1e-12);
  const auto series = prabhakar_integral_series(f, p, 0.0, k.terms);
  CHECK(series.terms == k.terms);
  const auto direct = prabhakar_integral(f, p, 0.0);
  CHECK(max_abs_diff(series.value.values, direct.values) <= 1e-8 * 30);

  const auto exp_series = prabhakar_integral_series(constant(1.0, 0.01, 200), {1, 1, 1, -0.7}, 0.0, 60);
  CHECK(std::fabs(exp_series.value.values.back() - std::expm1(-0.7 * 2) / -0.7) <= 1e-13);
  CHECK_THROWS_AS(prabhakar_integral_series(f, p, 0.0, kSeriesTermCap + 1), ConvergenceError);
}

TEST_CASE("cf_series and abc_series") {
  // constants telescope to zero
  const auto c = constant(1.5, 0.01, 100);
  CHECK(max_abs_diff(cf_series(c, 0.5, {}, 40).value.values, std::vector<double>(101, 0.0)) <= 1e-12);
  CHECK(max_abs_diff(abc_series(c, 0.5, {}, 80).value.values, std::vector<double>(101, 0.0)) <= 1e-10);

  // K = 0 with f(a) = 0 is (M/(1-a)) f
  const auto lin = linear(0.01, 100);
  const auto k0 = cf_series(lin, 0.5, {}, 0);
  for (std::size_t i = 0; i < lin.size(); ++i) CHECK(k0.value.values[i] == doctest::Approx(2 * lin.values[i]));
  const auto a0 = abc_series(lin, 0.5, {}, 0);
  for (std::size_t i = 0; i < lin.size(); ++i) CHECK(a0.value.values[i] == doctest::Approx(2 * lin.values[i]));

  // f = t on [0, 5]: series vs direct
  const auto f = linear(5e-3, 1000);
  CHECK(max_abs_diff(cf_series(f, 0.5, {}, 60).value.values, cf_derivative(f, 0.5).values) <= 1e-8);
  const int k = abc_series_terms(0.5, 5.0, 1e-10).terms;
  CHECK(max_abs_diff(abc_series(f, 0.5, {}, k).value.values, abc_derivative(f, 0.5).values) <= 1e-7);

  CHECK_THROWS_AS(cf_series(f, 0.96, {}, 10), DomainError);
  auto rough = f;
  rough.smoothness = Smoothness::L1;
  CHECK_THROWS_AS(cf_series(rough, 0.5, {}, 10), PreconditionError);
}

TEST_CASE("operators are linear") {
  const auto f = sine(1e-2, 300);
  const auto g = square(1e-2, 300);
  std::vector<double> combo(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) combo[i] = 2.5 * f.values[i] - 0.75 * g.values[i];
  std::vector<double> dcombo(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) dcombo[i] = 2.5 * (*f.derivative)[i] - 0.75 * (*g.derivative)[i];
  GridFunction h = f.with_values(combo);
  h.derivative = dcombo;
  h.smoothness = Smoothness::AC;

  OperatorSpec specs[5];
  specs[0] = {OperatorKind::RlIntegral, 0.7, std::nullopt, 0.0, {}};
  specs[1] = {OperatorKind::CaputoDerivative, 0.4, std::nullopt, 0.0, {}};
  specs[2] = {OperatorKind::CfDerivative, 0.6, std::nullopt, 0.0, {}};
  specs[3] = {OperatorKind::AbcDerivative, 0.6, std::nullopt, 0.0, {}};
  specs[4] = {OperatorKind::PrabhakarIntegral, 0.0, PrabhakarParams{0.6, 0.8, 1.5, -0.9}, 0.0, {}};
  for (const auto& spec : specs) {
    const auto lhs = apply(spec, h);
    const auto af = apply(spec, f);
    const auto ag = apply(spec, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      worst = std::max(worst, std::fabs(lhs.values[i] - (2.5 * af.values[i] - 0.75 * ag.values[i])));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("OperatorSpec validation") {
  OperatorSpec s{OperatorKind::CfDerivative, 1.2, std::nullopt, 0.0, {}};
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {OperatorKind::RlIntegral, 1.2, PrabhakarParams{}, 0.0, {}};
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {OperatorKind::PrabhakarIntegral, 0.0, std::nullopt, 0.0, {}};
  CHECK_THROWS_AS(s.validate(), DomainError);
}
