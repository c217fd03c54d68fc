#include "prabhakar/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "prabhakar/errors.hpp"

namespace prabhakar {

double laplace_invert(const LaplaceQuery& query, int nodes) {
  if (!(query.t > 0.0) || !std::isfinite(query.t)) {
    throw DomainError("laplace_invert needs t > 0");
  }
  if (nodes < 4) throw DomainError("laplace_invert needs at least 4 contour nodes");
  if (!query.transform) throw DomainError("laplace_invert needs a transform");

  constexpr double sigma = -0.6122;
  constexpr double mu = 0.5017;
  constexpr double nu = 0.2645;
  constexpr double beta = 0.6407;
  constexpr double pi = std::numbers::pi;

  const double shift = std::max(query.abscissa, 0.0);
  const double t = query.t;
  const double scale = nodes / t;
  const double step = 2.0 * pi / nodes;

  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < nodes; ++k) {
    const double theta = -pi + (k + 0.5) * step;
    const double cot = std::cos(beta * theta) / std::sin(beta * theta);
    const double sin_b = std::sin(beta * theta);
    const std::complex<double> z = scale * std::complex<double>(sigma + mu * theta * cot, nu * theta);
    const std::complex<double> dz =
        scale * std::complex<double>(mu * cot - mu * beta * theta / (sin_b * sin_b), nu);
    const std::complex<double> value = query.transform(z + shift);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw InversionError("Laplace transform is not finite at s = (" +
                           std::to_string((z + shift).real()) + ", " +
                           std::to_string((z + shift).imag()) + ")");
    }
    sum += std::exp(z * t) * value * dz;
  }
  const std::complex<double> result = sum * step / std::complex<double>(0.0, 2.0 * pi);
  return std::exp(shift * t) * result.real();
}

}  // namespace prabhakar
