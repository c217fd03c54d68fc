#include "prabhakar/operators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "prabhakar/compensated_sum.hpp"
#include "prabhakar/errors.hpp"
#include "prabhakar/quadrature.hpp"

namespace prabhakar {
namespace {

constexpr int kMomentNodes = 16;

void require_order_in_unit_interval(double alpha, const char* op) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(op) + " order must lie in (0, 1), got " + std::to_string(alpha));
  }
}

// (1 - x)^p - 1 + p x, the second-order remainder of the binomial series.
double binomial_remainder(double p, double x) {
  if (x > 0.5 || p * x > 2.0) return std::pow(1.0 - x, p) - 1.0 + p * x;
  CompensatedSum sum;
  double term = -p * x;  // k = 1
  for (int k = 2; k < 200; ++k) {
    term *= (p - k + 1.0) / k * (-x);
    sum += term;
    if (term == 0.0 || std::fabs(term) < 1e-18 * std::fabs(sum.value())) break;
  }
  return sum.value();
}

// (1 - e^-x)/x
double exp_moment0(double x) { return x == 0.0 ? 1.0 : -std::expm1(-x) / x; }

// (1 - e^-x (1 + x))/x^2
double exp_moment1(double x) {
  if (x < 1.0) {
    // sum_k (-1)^k (k+1) x^k / (k+2)!
    CompensatedSum sum;
    double power = 1.0;
    double factorial = 2.0;
    for (int k = 0; k < 40; ++k) {
      const double term = (k + 1.0) * power / factorial;
      sum += (k % 2 == 0) ? term : -term;
      if (term < 1e-18) break;
      power *= x;
      factorial *= (k + 3.0);
    }
    return sum.value();
  }
  return (1.0 - std::exp(-x) * (1.0 + x)) / (x * x);
}

ConvolutionWeights weights_from_kernel(const std::function<double(double)>& kernel,
                                       double first_mu0, double first_mu1, double h,
                                       std::size_t intervals) {
  ConvolutionWeights w;
  w.mu0.resize(intervals);
  w.mu1.resize(intervals);
  w.mu0[0] = first_mu0;
  w.mu1[0] = first_mu1;
  const auto& rule = quadrature::gauss_legendre(kMomentNodes);
  for (std::size_t m = 2; m <= intervals; ++m) {
    const double left = static_cast<double>(m - 1) * h;
    double m0 = 0.0;
    double m1 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double theta = 0.5 * (1.0 + rule.nodes[i]);
      const double k = kernel(left + theta * h);
      m0 += rule.weights[i] * k;
      m1 += rule.weights[i] * k * theta;
    }
    w.mu0[m - 1] = 0.5 * h * m0;
    w.mu1[m - 1] = 0.5 * h * m1;
  }
  return w;
}

const std::vector<double>& derivative_samples(const GridFunction& f, DerivativeSource source,
                                              std::vector<double>& scratch, bool& synthesized) {
  synthesized = false;
  if (f.derivative) return *f.derivative;
  if (f.smoothness == Smoothness::L1) {
    throw PreconditionError("operator needs f' but the grid function is only declared L1");
  }
  if (source == DerivativeSource::RequireSamples) {
    throw PreconditionError("operator needs derivative samples and synthesis is disabled");
  }
  scratch = finite_difference_derivative(f);
  synthesized = true;
  return scratch;
}

GridFunction convolve_derivative(const GridFunction& f, const ConvolutionWeights& w,
                                 DerivativeSource source) {
  std::vector<double> scratch;
  bool synthesized = false;
  const auto& d = derivative_samples(f, source, scratch, synthesized);
  GridFunction out = f.with_values(convolve(w, d));
  out.synthesized_derivative = synthesized;
  return out;
}

void check_series_inputs(const GridFunction& f, double alpha, int terms, const char* op) {
  f.validate();
  require_order_in_unit_interval(alpha, op);
  if (alpha > kSeriesOrderCap) {
    throw DomainError(std::string(op) + " is capped at alpha <= 0.95 (the alternating series " +
                      "loses all digits beyond it), got " + std::to_string(alpha));
  }
  if (f.smoothness == Smoothness::L1) {
    throw PreconditionError(std::string(op) + " needs an absolutely continuous f (tag AC or H1)");
  }
  if (terms < 0) throw DomainError(std::string(op) + " needs K >= 0");
  if (terms > kSeriesTermCap) {
    throw ConvergenceError(std::string(op) + " K = " + std::to_string(terms) +
                           " exceeds the hard cap " + std::to_string(kSeriesTermCap));
  }
}

// Accumulates sum_k c_k J^{sigma_k} f pointwise and records diagnostics.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(std::size_t size) : sums_(size), abs_(size, 0.0) {}

  void add(double coefficient, const std::vector<double>& values) {
    double largest = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double term = coefficient * values[i];
      sums_[i] += term;
      abs_[i] += std::fabs(term);
      largest = std::max(largest, std::fabs(term));
    }
    last_term_ = largest;
  }

  void add_offset(const std::vector<double>& offset) {
    for (std::size_t i = 0; i < offset.size(); ++i) {
      sums_[i] += offset[i];
      abs_[i] += std::fabs(offset[i]);
    }
  }

  SeriesResult finish(const GridFunction& grid, int terms) const {
    std::vector<double> values(sums_.size());
    double peak = 0.0;
    double abs_peak = 0.0;
    for (std::size_t i = 0; i < sums_.size(); ++i) {
      values[i] = sums_[i].value();
      peak = std::max(peak, std::fabs(values[i]));
      abs_peak = std::max(abs_peak, abs_[i]);
    }
    SeriesResult r;
    r.value = grid.with_values(std::move(values));
    r.terms = terms;
    r.last_term = last_term_;
    r.cancellation = peak > 0.0 ? abs_peak / peak : (abs_peak > 0.0 ? INFINITY : 1.0);
    return r;
  }

 private:
  std::vector<CompensatedSum> sums_;
  std::vector<double> abs_;
  double last_term_ = 0.0;
};

}  // namespace

void ConvolutionWeights::scale(double factor) {
  for (auto& v : mu0) v *= factor;
  for (auto& v : mu1) v *= factor;
}

ConvolutionWeights rl_weights(double sigma, double h, std::size_t intervals) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("Riemann-Liouville order must be finite and > 0, got " +
                      std::to_string(sigma));
  }
  if (!(h > 0.0)) throw DomainError("grid step must be > 0");
  ConvolutionWeights w;
  w.mu0.resize(intervals);
  w.mu1.resize(intervals);
  const bool direct = sigma < 160.0;
  const double gamma1 = direct ? gamma_fn(sigma + 1.0) : 0.0;
  const double log_gamma1 = std::lgamma(sigma + 1.0);
  for (std::size_t m = 1; m <= intervals; ++m) {
    const double md = static_cast<double>(m);
    const double t = md * h;
    // (m h)^sigma / Gamma(sigma + 1)
    double scale = direct ? std::pow(t, sigma) / gamma1
                          : std::exp(sigma * std::log(t) - log_gamma1);
    if (!std::isfinite(scale)) scale = std::exp(sigma * std::log(t) - log_gamma1);
    const double x = 1.0 / md;
    const double head = (m == 1) ? 1.0 : -std::expm1(sigma * std::log1p(-x));
    w.mu0[m - 1] = scale * head;
    w.mu1[m - 1] = scale * md / (sigma + 1.0) * binomial_remainder(sigma + 1.0, x);
  }
  return w;
}

ConvolutionWeights exponential_weights(double rate, double h, std::size_t intervals) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) throw DomainError("exponential rate must be >= 0");
  ConvolutionWeights w;
  w.mu0.resize(intervals);
  w.mu1.resize(intervals);
  const double x = rate * h;
  const double m0 = h * exp_moment0(x);
  const double m1 = h * exp_moment1(x);
  for (std::size_t m = 1; m <= intervals; ++m) {
    const double decay = std::exp(-rate * static_cast<double>(m - 1) * h);
    w.mu0[m - 1] = decay * m0;
    w.mu1[m - 1] = decay * m1;
  }
  return w;
}

ConvolutionWeights prabhakar_weights(const PrabhakarParams& p, double h, std::size_t intervals) {
  p.validate();
  // int_0^h s^{b-1} E^g_{a,b}(w s^a) ds = h^b E^g_{a,b+1}(w h^a), and the
  // first moment follows from 1/((c+1) Gamma(c)) = 1/Gamma(c+1) - 1/Gamma(c+2).
  const double z = p.omega * std::pow(h, p.alpha);
  PrabhakarParams up1 = p;
  up1.beta = p.beta + 1.0;
  PrabhakarParams up2 = p;
  up2.beta = p.beta + 2.0;
  const double hb = std::pow(h, p.beta);
  const double e1 = prabhakar_function(up1, z);
  const double e2 = prabhakar_function(up2, z);
  return weights_from_kernel([&p](double s) { return prabhakar_kernel(p, s); }, hb * e1,
                             hb * (e1 - e2), h, intervals);
}

ConvolutionWeights abc_kernel_weights(double alpha, double rate, double h, std::size_t intervals) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("ABC kernel order must lie in (0, 1]");
  const double z = -rate * std::pow(h, alpha);
  const double e2 = prabhakar_function({alpha, 2.0, 1.0, 0.0}, z);
  const double e3 = prabhakar_function({alpha, 3.0, 1.0, 0.0}, z);
  return weights_from_kernel(
      [alpha, rate](double s) { return mittag_leffler(alpha, -rate * std::pow(s, alpha)); },
      h * e2, h * (e2 - e3), h, intervals);
}

double convolve_at(const ConvolutionWeights& w, std::span<const double> g, std::size_t n) {
  double sum = 0.0;
  for (std::size_t m = 1; m <= n; ++m) {
    sum += g[n - m] * w.mu1[m - 1] + g[n - m + 1] * (w.mu0[m - 1] - w.mu1[m - 1]);
  }
  return sum;
}

std::vector<double> convolve(const ConvolutionWeights& w, std::span<const double> g) {
  const std::size_t n_max = g.size() - 1;
  if (w.size() < n_max) throw DomainError("convolution weights shorter than the grid");
  std::vector<double> rest(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) rest[i] = w.mu0[i] - w.mu1[i];
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    double sum = 0.0;
    for (std::size_t m = 1; m <= n; ++m) {
      sum += g[n - m] * w.mu1[m - 1] + g[n - m + 1] * rest[m - 1];
    }
    out[n] = sum;
  }
  return out;
}

void OperatorSpec::validate() const {
  switch (kind) {
    case OperatorKind::RlIntegral:
      if (!(order > 0.0) || !std::isfinite(order)) {
        throw DomainError("Riemann-Liouville order must be > 0");
      }
      break;
    case OperatorKind::CaputoDerivative:
    case OperatorKind::CfDerivative:
    case OperatorKind::AbcDerivative:
      require_order_in_unit_interval(order, "derivative");
      break;
    case OperatorKind::PrabhakarIntegral:
      break;
  }
  if ((kind == OperatorKind::PrabhakarIntegral) != prabhakar.has_value()) {
    throw DomainError("Prabhakar parameters must be given exactly for the Prabhakar integral");
  }
  if (prabhakar) prabhakar->validate();
}

GridFunction rl_integral(const GridFunction& f, double sigma) {
  f.validate();
  const auto w = rl_weights(sigma, f.h, f.intervals());
  return f.with_values(convolve(w, f.values));
}

GridFunction caputo_derivative(const GridFunction& f, double alpha, DerivativeSource source) {
  f.validate();
  require_order_in_unit_interval(alpha, "Caputo derivative");
  return convolve_derivative(f, rl_weights(1.0 - alpha, f.h, f.intervals()), source);
}

GridFunction cf_derivative(const GridFunction& f, double alpha, const NormalizationFn& norm,
                           DerivativeSource source) {
  f.validate();
  require_order_in_unit_interval(alpha, "Caputo-Fabrizio derivative");
  auto w = exponential_weights(alpha / (1.0 - alpha), f.h, f.intervals());
  w.scale(norm(alpha) / (1.0 - alpha));
  return convolve_derivative(f, w, source);
}

GridFunction abc_derivative(const GridFunction& f, double alpha, const NormalizationFn& norm,
                            DerivativeSource source) {
  f.validate();
  require_order_in_unit_interval(alpha, "Atangana-Baleanu derivative");
  auto w = abc_kernel_weights(alpha, alpha / (1.0 - alpha), f.h, f.intervals());
  w.scale(norm(alpha) / (1.0 - alpha));
  return convolve_derivative(f, w, source);
}

GridFunction prabhakar_integral(const GridFunction& f, const PrabhakarParams& p, double a) {
  f.validate();
  p.validate();
  if (std::fabs(a - f.a) > 1e-12 * std::max(1.0, std::fabs(a))) {
    throw DomainError("Prabhakar integral lower limit must equal the grid start");
  }
  const auto w = prabhakar_weights(p, f.h, f.intervals());
  return f.with_values(convolve(w, f.values));
}

SeriesResult prabhakar_integral_series(const GridFunction& f, const PrabhakarParams& p, double a,
                                       int terms) {
  f.validate();
  p.validate();
  if (std::fabs(a - f.a) > 1e-12 * std::max(1.0, std::fabs(a))) {
    throw DomainError("Prabhakar integral lower limit must equal the grid start");
  }
  if (terms < 0) throw DomainError("series needs K >= 0");
  if (terms > kSeriesTermCap) {
    throw ConvergenceError("series K = " + std::to_string(terms) + " exceeds the hard cap " +
                           std::to_string(kSeriesTermCap));
  }
  SeriesAccumulator acc(f.size());
  double coefficient = 1.0;  // (gamma)_k omega^k / k!
  for (int k = 0; k <= terms; ++k) {
    if (coefficient != 0.0) {
      const auto w = rl_weights(p.alpha * k + p.beta, f.h, f.intervals());
      acc.add(coefficient, convolve(w, f.values));
    } else {
      acc.add(0.0, f.values);
    }
    coefficient *= (p.gamma + k) / (k + 1.0) * p.omega;
  }
  return acc.finish(f, terms);
}

SeriesResult cf_series(const GridFunction& f, double alpha, const NormalizationFn& norm,
                       int terms) {
  check_series_inputs(f, alpha, terms, "cf_series");
  const double omega = order_rate(alpha);
  const double prefactor = norm(alpha) / (1.0 - alpha);
  const double fa = f.values.front();

  SeriesAccumulator acc(f.size());
  std::vector<double> initial(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    initial[i] = -prefactor * fa * std::exp(omega * (f.time(i) - f.a));
  }
  acc.add_offset(initial);
  double coefficient = prefactor;
  for (int k = 0; k <= terms; ++k) {
    if (k == 0) {
      acc.add(coefficient, f.values);
    } else {
      acc.add(coefficient, convolve(rl_weights(k, f.h, f.intervals()), f.values));
    }
    coefficient *= omega;
  }
  return acc.finish(f, terms);
}

SeriesResult abc_series(const GridFunction& f, double alpha, const NormalizationFn& norm,
                        int terms) {
  check_series_inputs(f, alpha, terms, "abc_series");
  const double omega = order_rate(alpha);
  const double prefactor = norm(alpha) / (1.0 - alpha);
  const double fa = f.values.front();

  SeriesAccumulator acc(f.size());
  std::vector<double> initial(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double elapsed = f.time(i) - f.a;
    initial[i] = -prefactor * fa * mittag_leffler(alpha, omega * std::pow(elapsed, alpha));
  }
  acc.add_offset(initial);
  double coefficient = prefactor;
  for (int k = 0; k <= terms; ++k) {
    if (k == 0) {
      acc.add(coefficient, f.values);
    } else {
      acc.add(coefficient, convolve(rl_weights(alpha * k, f.h, f.intervals()), f.values));
    }
    coefficient *= omega;
  }
  return acc.finish(f, terms);
}

Truncation prabhakar_series_terms(const PrabhakarParams& p, double horizon, double tol) {
  PrabhakarParams bound = p;
  bound.beta = p.beta + 1.0;
  return series_truncation(bound, std::fabs(p.omega) * std::pow(horizon, p.alpha), tol);
}

Truncation cf_series_terms(double alpha, double horizon, double tol) {
  return series_truncation({1.0, 1.0, 1.0, 0.0}, std::fabs(order_rate(alpha)) * horizon, tol);
}

Truncation abc_series_terms(double alpha, double horizon, double tol) {
  return series_truncation({alpha, 1.0, 1.0, 0.0},
                           std::fabs(order_rate(alpha)) * std::pow(horizon, alpha), tol);
}

GridFunction apply(const OperatorSpec& spec, const GridFunction& f, DerivativeSource source) {
  spec.validate();
  switch (spec.kind) {
    case OperatorKind::RlIntegral:
      return rl_integral(f, spec.order);
    case OperatorKind::CaputoDerivative:
      return caputo_derivative(f, spec.order, source);
    case OperatorKind::CfDerivative:
      return cf_derivative(f, spec.order, spec.norm, source);
    case OperatorKind::AbcDerivative:
      return abc_derivative(f, spec.order, spec.norm, source);
    case OperatorKind::PrabhakarIntegral:
      return prabhakar_integral(f, *spec.prabhakar, spec.a);
  }
  throw DomainError("unknown operator kind");
}

}  // namespace prabhakar
