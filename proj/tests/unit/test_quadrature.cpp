#include <doctest.h>

#include <cmath>
#include <numbers>

#include "prabhakar/compensated_sum.hpp"
#include "prabhakar/quadrature.hpp"

using namespace prabhakar;

TEST_CASE("gauss_legendre: weights sum to 2 and polynomials integrate exactly") {
  for (int n : {8, 12, 16, 24, 5}) {
    const auto& rule = quadrature::gauss_legendre(n);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    // degree 2n - 1 is exact
    const int degree = 2 * n - 1;
    const double got = quadrature::integrate(rule, [&](double x) { return std::pow(x, degree - 1); }, 0.0, 1.0);
    CHECK(got == doctest::Approx(1.0 / degree).epsilon(1e-13));
  }
}

TEST_CASE("tanh_sinh: endpoint singularities") {
  // int_0^1 x^-1/2 dx = 2
  auto r = quadrature::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-14);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  // int_0^1 log(x) dx = -1
  r = quadrature::tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0, 1e-14);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-12));
  // int_0^pi sin = 2
  r = quadrature::tanh_sinh([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-14);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("CompensatedSum recovers digits a naive sum loses") {
  CompensatedSum s;
  s += 1e16;
  for (int i = 0; i < 1000; ++i) s += 1.0;
  s += -1e16;
  CHECK(s.value() == 1000.0);
}
