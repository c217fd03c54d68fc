#pragma once

#include <complex>
#include <functional>

namespace prabhakar {

/// f(t) from its Laplace transform F(s), F analytic for Re s > abscissa.
struct LaplaceQuery {
  std::function<std::complex<double>(std::complex<double>)> transform;
  double abscissa = 0.0;
  double t = 1.0;
};

inline constexpr int kTalbotNodes = 32;

/// Trapezoidal rule on the Weideman-Trefethen optimized cotangent contour
///   s(theta) = (N/t) (-0.6122 + 0.5017 theta cot(0.6407 theta) + 0.2645 i theta),
/// shifted right by max(abscissa, 0). Throws InversionError on a non-finite
/// transform sample and DomainError for t <= 0.
double laplace_invert(const LaplaceQuery& query, int nodes = kTalbotNodes);

}  // namespace prabhakar
