#include "prabhakar/quadrature.hpp"

#include <array>
#include <stdexcept>

namespace prabhakar::quadrature {

GaussLegendreRule make_gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

const GaussLegendreRule& gauss_legendre(int n) {
  static const std::array<GaussLegendreRule, 4> cache = {
      make_gauss_legendre(8), make_gauss_legendre(12), make_gauss_legendre(16),
      make_gauss_legendre(24)};
  for (const auto& rule : cache) {
    if (static_cast<int>(rule.nodes.size()) == n) return rule;
  }
  thread_local GaussLegendreRule scratch;
  scratch = make_gauss_legendre(n);
  return scratch;
}

}  // namespace prabhakar::quadrature
