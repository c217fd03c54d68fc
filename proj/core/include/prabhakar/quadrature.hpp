#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "prabhakar/compensated_sum.hpp"

namespace prabhakar::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Builds the n-point rule by Newton iteration on P_n. Rules for the sizes the
/// library uses internally are cached; other sizes are computed on each call.
const GaussLegendreRule& gauss_legendre(int n);
GaussLegendreRule make_gauss_legendre(int n);

template <typename F>
double integrate(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

struct TanhSinhResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
  bool converged = false;
};

/// Double-exponential (tanh-sinh) quadrature on a finite interval. Each level
/// halves the step and only evaluates the new abscissae. Endpoint
/// singularities of algebraic type are tolerated; f is never evaluated at a or b.
template <typename F>
TanhSinhResult tanh_sinh(F&& f, double a, double b, double rel_tol, int max_levels = 12) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  constexpr double t_max = 4.5;
  const double half = 0.5 * (b - a);

  auto node = [&](double t, CompensatedSum& acc) {
    const double u = half_pi * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = half_pi * std::cosh(t) / (cu * cu);
    // distance to the nearer endpoint, computed without cancellation
    const double delta = half * 2.0 / (std::exp(2.0 * std::fabs(u)) + 1.0);
    const double x = (t < 0.0) ? a + delta : b - delta;
    if (!(x > a && x < b) || w == 0.0) return;
    acc += w * f(x);
  };

  CompensatedSum acc;
  double step = 1.0;
  node(0.0, acc);
  for (double t = step; t <= t_max; t += step) {
    node(t, acc);
    node(-t, acc);
  }
  TanhSinhResult result;
  double previous = acc.value() * step * half;
  result.value = previous;
  for (int level = 1; level <= max_levels; ++level) {
    step *= 0.5;
    for (double t = step; t <= t_max; t += 2.0 * step) {
      node(t, acc);
      node(-t, acc);
    }
    const double current = acc.value() * step * half;
    result.value = current;
    result.levels = level;
    result.error_estimate = std::fabs(current - previous);
    if (level >= 3 && result.error_estimate <= rel_tol * std::fabs(current)) {
      result.converged = true;
      return result;
    }
    previous = current;
  }
  return result;
}

}  // namespace prabhakar::quadrature
