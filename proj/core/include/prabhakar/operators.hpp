#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prabhakar/grid_function.hpp"
#include "prabhakar/normalization.hpp"
#include "prabhakar/special_functions.hpp"

namespace prabhakar {

// Product-trapezoidal convolution
// ------------------------------------------------------------------
//
// Every operator here evaluates  out(t_n) = int_a^{t_n} k(t_n - tau) g(tau) dtau
// with g replaced by its piecewise-linear interpolant on the grid. On the
// m-th subinterval counted back from t_n, s = t_n - tau runs over
// [(m-1)h, mh] and the interpolant only needs the two kernel moments
//
//   mu0_m = int k(s) ds,   mu1_m = int k(s) (s - (m-1)h)/h ds,
//
// which gives out_n = sum_m  g_{n-m} mu1_m + g_{n-m+1} (mu0_m - mu1_m).

struct ConvolutionWeights {
  std::vector<double> mu0;  ///< mu0[m-1] for m = 1..N
  std::vector<double> mu1;

  std::size_t size() const { return mu0.size(); }
  /// Weight multiplying g_n in out_n.
  double endpoint() const { return mu0.front() - mu1.front(); }
  void scale(double factor);
};

/// Exact moments of the Riemann-Liouville kernel s^(sigma-1)/Gamma(sigma).
ConvolutionWeights rl_weights(double sigma, double h, std::size_t intervals);
/// Exact moments of exp(-rate s).
ConvolutionWeights exponential_weights(double rate, double h, std::size_t intervals);
/// Moments of the Prabhakar kernel: the first subinterval through the
/// closed forms h^beta E^gamma_{alpha,beta+1} and h^beta E^gamma_{alpha,beta+2},
/// the rest by 16-point Gauss-Legendre on the kernel values.
ConvolutionWeights prabhakar_weights(const PrabhakarParams& p, double h, std::size_t intervals);
/// Moments of E_alpha(-rate s^alpha), the Atangana-Baleanu kernel.
ConvolutionWeights abc_kernel_weights(double alpha, double rate, double h, std::size_t intervals);

/// out_n for every n = 0..N (out_0 = 0).
std::vector<double> convolve(const ConvolutionWeights& w, std::span<const double> g);
/// out_n for a single n, reading g[0..n].
double convolve_at(const ConvolutionWeights& w, std::span<const double> g, std::size_t n);

// Operators
// ------------------------------------------------------------------

enum class OperatorKind { RlIntegral, CaputoDerivative, CfDerivative, AbcDerivative, PrabhakarIntegral };

/// Whether an operator acting on f' may fall back to finite differences.
enum class DerivativeSource { AllowSynthesis, RequireSamples };

struct OperatorSpec {
  OperatorKind kind = OperatorKind::RlIntegral;
  double order = 1.0;
  std::optional<PrabhakarParams> prabhakar;
  double a = 0.0;
  NormalizationFn norm;

  void validate() const;
};

/// Riemann-Liouville integral J^sigma f on the grid of f; exact for
/// piecewise-linear f.
GridFunction rl_integral(const GridFunction& f, double sigma);

/// J^(1-alpha) f'.
GridFunction caputo_derivative(const GridFunction& f, double alpha,
                               DerivativeSource source = DerivativeSource::AllowSynthesis);

/// M(alpha)/(1-alpha) int_a^t exp(-alpha (t-tau)/(1-alpha)) f'(tau) dtau.
GridFunction cf_derivative(const GridFunction& f, double alpha, const NormalizationFn& norm = {},
                           DerivativeSource source = DerivativeSource::AllowSynthesis);

/// B(alpha)/(1-alpha) int_a^t E_alpha(-alpha (t-tau)^alpha/(1-alpha)) f'(tau) dtau.
GridFunction abc_derivative(const GridFunction& f, double alpha, const NormalizationFn& norm = {},
                            DerivativeSource source = DerivativeSource::AllowSynthesis);

/// int_a^t e^gamma_{alpha,beta}(omega; t - tau) f(tau) dtau. The lower limit
/// must coincide with the start of the grid.
GridFunction prabhakar_integral(const GridFunction& f, const PrabhakarParams& p, double a);

struct SeriesResult {
  GridFunction value;
  int terms = 0;
  /// max_n |last retained term at t_n|
  double last_term = 0.0;
  /// max_n sum_k |term_k(t_n)| / max_n |value(t_n)|; large values flag cancellation.
  double cancellation = 0.0;
};

/// sum_{k=0}^{K} (gamma)_k omega^k / k! J^(alpha k + beta) f.
SeriesResult prabhakar_integral_series(const GridFunction& f, const PrabhakarParams& p, double a,
                                       int terms);

/// -M f(a+)/(1-alpha) exp(-alpha (t-a)/(1-alpha))
///   + M/(1-alpha) sum_{k=0}^{K} (-alpha/(1-alpha))^k J^k f.
SeriesResult cf_series(const GridFunction& f, double alpha, const NormalizationFn& norm, int terms);

/// -B f(a+)/(1-alpha) E_alpha(-alpha (t-a)^alpha/(1-alpha))
///   + B/(1-alpha) sum_{k=0}^{K} (-alpha/(1-alpha))^k J^(alpha k) f.
SeriesResult abc_series(const GridFunction& f, double alpha, const NormalizationFn& norm, int terms);

/// Orders above this are rejected by cf_series and abc_series.
inline constexpr double kSeriesOrderCap = 0.95;

// Term counts for the series paths on [a, a + horizon]. Each bounds the
// k-th term by sup|f| times the corresponding Prabhakar-series term, so tol
// is relative to sup|f| (times horizon^beta for the Prabhakar integral).
Truncation prabhakar_series_terms(const PrabhakarParams& p, double horizon, double tol);
Truncation cf_series_terms(double alpha, double horizon, double tol);
Truncation abc_series_terms(double alpha, double horizon, double tol);

/// Dispatches on spec.kind.
GridFunction apply(const OperatorSpec& spec, const GridFunction& f,
                   DerivativeSource source = DerivativeSource::AllowSynthesis);

}  // namespace prabhakar
