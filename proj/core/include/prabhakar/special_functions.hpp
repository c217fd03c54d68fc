#pragma once

#include <cstdint>

namespace prabhakar {

/// Parameters (alpha, beta, gamma, omega) shared by the Prabhakar function,
/// kernel and integral. omega carries units of time^(-alpha).
struct PrabhakarParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double omega = 0.0;
  /// Admit gamma <= 0. No accuracy guarantee is made for that regime.
  bool experimental = false;

  /// (1, 1, 1, -alpha/(1-alpha)): the kernel of the Caputo-Fabrizio operator.
  static PrabhakarParams from_cf_order(double alpha);
  /// (alpha, 1, 1, -alpha/(1-alpha)): the kernel of the Atangana-Baleanu operator.
  static PrabhakarParams from_abc_order(double alpha);

  bool valid() const noexcept;
  /// Throws DomainError describing the first violated invariant.
  void validate() const;
};

/// -alpha/(1-alpha), the exponent rate shared by the CF and ABC kernels.
double order_rate(double alpha);

/// Validated argument window of mittag_leffler for alpha < 1.
inline constexpr double kMittagLefflerLowerBound = -1000.0;
inline constexpr double kMittagLefflerUpperBound = 5.0;
/// Hard cap on the number of series terms.
inline constexpr int kSeriesTermCap = 400;

/// Gamma function on the reals. Lanczos approximation (g = 607/128) for
/// x >= 1/2 and the reflection formula below. Throws DomainError at the poles
/// 0, -1, -2, ... and RangeError when the result overflows.
double gamma_fn(double x);

/// Rising factorial (gamma)_k as a direct product.
double pochhammer(double gamma, std::int64_t k);

/// One-parameter Mittag-Leffler function E_alpha(z) for alpha in (0, 1].
///
/// For alpha < 1 the power series is used on [-1, 5] whenever it truncates
/// within kSeriesTermCap terms; otherwise E_alpha is computed from its
/// Laplace-spectral representation, which for real z reduces to an integral
/// of a bounded positive function over an angle interval of length
/// (1 -/+ alpha) pi. That route avoids the cancellation of the alternating
/// series. Throws RangeError outside [kMittagLefflerLowerBound,
/// kMittagLefflerUpperBound] or when the result would overflow.
double mittag_leffler(double alpha, double z);

/// Three-parameter Mittag-Leffler (Prabhakar) function E^gamma_{alpha,beta}(z).
/// Reduces to mittag_leffler when gamma = beta = 1 and alpha <= 1; otherwise
/// sums the series with compensated accumulation and throws RangeError if
/// |z| > kMittagLefflerUpperBound or cancellation would cost more than four
/// digits.
double prabhakar_function(const PrabhakarParams& p, double z);

/// Prabhakar kernel t^(beta-1) E^gamma_{alpha,beta}(omega t^alpha), t > 0.
double prabhakar_kernel(const PrabhakarParams& p, double t);

struct Truncation {
  int terms = 0;            ///< last retained index K
  double tail_bound = 0.0;  ///< bound on sum_{k>K} |term_k(z_max)|
};

/// Smallest K for which the tail of the Prabhakar series at |z| = z_max is
/// below tol. The bound is a_{K+1} / (1 - r) where r bounds every later
/// term ratio; r is non-increasing in K because Gamma(x)/Gamma(x+alpha) is.
/// Throws ConvergenceError if K would exceed cap.
Truncation series_truncation(const PrabhakarParams& p, double z_max, double tol,
                             int cap = kSeriesTermCap);

namespace detail {

/// Series-only evaluation used by tests to check the branch seam.
double mittag_leffler_series(double alpha, double z);
/// Spectral-integral evaluation, valid for every real z when 0 < alpha < 1.
double mittag_leffler_integral(double alpha, double z);

}  // namespace detail

}  // namespace prabhakar
