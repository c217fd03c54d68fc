#include "prabhakar/special_functions.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "prabhakar/compensated_sum.hpp"
#include "prabhakar/errors.hpp"
#include "prabhakar/quadrature.hpp"

namespace prabhakar {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

// Largest x for which Gamma(x) is finite in double precision.
constexpr double kGammaOverflow = 171.6243769563027;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
  double r = std::remainder(x, 2.0);
  double sign = 1.0;
  if (r < 0.0) {
    r = -r;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(kPi * r);
}

double lanczos_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // split the power so t^(z+1/2) cannot overflow before exp(-t) is applied
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * sum * (half_power * std::exp(-t)) * half_power;
}

// c / Gamma(x) for x > 0 without overflowing Gamma.
double divide_by_gamma(double c, double x) {
  if (c == 0.0) return 0.0;
  if (x < 170.0) return c / gamma_fn(x);
  return std::copysign(std::exp(std::log(std::fabs(c)) - std::lgamma(x)), c);
}

struct SeriesValue {
  double value = 0.0;
  double abs_sum = 0.0;
};

// sum_{k=0}^{K} (gamma)_k z^k / (k! Gamma(alpha k + beta))
SeriesValue prabhakar_series(const PrabhakarParams& p, double z, int last) {
  CompensatedSum sum;
  double abs_sum = 0.0;
  double coeff = 1.0;
  for (int k = 0; k <= last; ++k) {
    const double term = divide_by_gamma(coeff, p.alpha * k + p.beta);
    sum += term;
    abs_sum += std::fabs(term);
    coeff *= (p.gamma + k) / (k + 1.0) * z;
    if (!std::isfinite(coeff)) {
      throw RangeError("Prabhakar series coefficient overflow at z = " + fmt(z),
                       kMittagLefflerUpperBound);
    }
  }
  return {sum.value(), abs_sum};
}

// log of |a_k| = |(gamma)_k| z^k / (k! Gamma(alpha k + beta)) built incrementally
class TermMagnitudes {
 public:
  TermMagnitudes(const PrabhakarParams& p, double z) : p_(p), log_z_(std::log(z)) {}

  // advances to index k + 1 and returns log a_{k+1}
  double next() {
    const double factor = std::fabs(p_.gamma + k_);
    if (factor == 0.0) {
      zero_ = true;
    } else {
      log_poch_ += std::log(factor);
    }
    ++k_;
    log_fact_ += std::log(static_cast<double>(k_));
    return current();
  }

  double current() const {
    if (zero_) return -std::numeric_limits<double>::infinity();
    return log_poch_ - log_fact_ - std::lgamma(p_.alpha * k_ + p_.beta) + k_ * log_z_;
  }

  int index() const { return k_; }

 private:
  const PrabhakarParams& p_;
  double log_z_;
  double log_poch_ = 0.0;
  double log_fact_ = 0.0;
  int k_ = 0;
  bool zero_ = false;
};

}  // namespace

PrabhakarParams PrabhakarParams::from_cf_order(double alpha) {
  return {1.0, 1.0, 1.0, order_rate(alpha), false};
}

PrabhakarParams PrabhakarParams::from_abc_order(double alpha) {
  return {alpha, 1.0, 1.0, order_rate(alpha), false};
}

bool PrabhakarParams::valid() const noexcept {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
      !std::isfinite(omega)) {
    return false;
  }
  if (!(alpha > 0.0) || !(beta > 0.0)) return false;
  return experimental || gamma > 0.0;
}

void PrabhakarParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
      !std::isfinite(omega)) {
    throw DomainError("Prabhakar parameters must be finite");
  }
  if (!(alpha > 0.0)) throw DomainError("Prabhakar alpha must be > 0, got " + fmt(alpha));
  if (!(beta > 0.0)) throw DomainError("Prabhakar beta must be > 0, got " + fmt(beta));
  if (!experimental && !(gamma > 0.0)) {
    throw DomainError("Prabhakar gamma must be > 0 (gamma <= 0 needs the experimental flag), got " +
                      fmt(gamma));
  }
}

double order_rate(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("operator order must lie in (0, 1), got " + fmt(alpha));
  }
  return -alpha / (1.0 - alpha);
}

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn argument must be finite");
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError("gamma_fn pole at x = " + fmt(x));
  }
  if (x > kGammaOverflow) throw RangeError("gamma_fn overflows for x = " + fmt(x), kGammaOverflow);
  if (x < 0.5) {
    return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double pochhammer(double gamma, std::int64_t k) {
  if (k < 0) throw DomainError("pochhammer index must be >= 0");
  double product = 1.0;
  for (std::int64_t j = 0; j < k; ++j) product *= gamma + static_cast<double>(j);
  return product;
}

Truncation series_truncation(const PrabhakarParams& p, double z_max, double tol, int cap) {
  p.validate();
  if (!(tol > 0.0)) throw DomainError("series_truncation tolerance must be > 0");
  if (!(z_max >= 0.0) || !std::isfinite(z_max)) {
    throw DomainError("series_truncation z_max must be finite and >= 0");
  }
  if (z_max == 0.0) return {0, 0.0};

  // Term ratios are bounded by max(1, |gamma+j|/(j+1)) Gamma(aj+b)/Gamma(aj+a+b) z,
  // which is non-increasing once j >= |gamma| (or for all j when gamma > 0).
  const int first_admissible =
      p.gamma > 0.0 ? 0 : static_cast<int>(std::ceil(std::fabs(p.gamma)));
  auto ratio_bound = [&](int j) {
    const double poch = std::max(1.0, std::fabs(p.gamma + j) / (j + 1.0));
    const double gamma_ratio =
        std::exp(std::lgamma(p.alpha * j + p.beta) - std::lgamma(p.alpha * j + p.alpha + p.beta));
    return poch * gamma_ratio * z_max;
  };

  TermMagnitudes terms(p, z_max);
  for (int last = 0; last <= cap; ++last) {
    const double log_next = terms.next();  // log a_{last+1}
    if (last < first_admissible) continue;
    if (std::isinf(log_next) && log_next < 0.0) return {last, 0.0};
    const double r = ratio_bound(last + 1);
    if (r >= 1.0) continue;
    const double bound = std::exp(log_next) / (1.0 - r);
    if (bound < tol) return {last, bound};
  }
  std::ostringstream os;
  os << "Prabhakar series needs more than " << cap << " terms at |z| = " << z_max
     << " for tolerance " << tol;
  throw ConvergenceError(os.str());
}

namespace detail {

double mittag_leffler_series(double alpha, double z) {
  const PrabhakarParams p{alpha, 1.0, 1.0, 0.0, false};
  const auto k = series_truncation(p, std::fabs(z), 1e-17);
  return prabhakar_series(p, z, k.terms).value;
}

double mittag_leffler_integral(double alpha, double z) {
  if (z == 0.0) return 1.0;
  const double a_pi = alpha * kPi;
  const double s = std::sin(a_pi);
  const double c = std::cos(a_pi);
  const double inv = 1.0 / alpha;

  quadrature::TanhSinhResult r;
  if (z < 0.0) {
    const double x = -z;
    auto f = [&](double phi) {
      const double u = s * std::tan(phi) - c;
      if (u <= 0.0) return 1.0;
      return std::exp(-std::pow(x * u, inv));
    };
    r = quadrature::tanh_sinh(f, 0.5 * kPi - a_pi, 0.5 * kPi, 1e-14);
  } else {
    auto f = [&](double phi) {
      const double w = s * std::tan(phi) + c;
      if (w <= 0.0) return 1.0;
      return std::exp(-std::pow(z * w, inv));
    };
    r = quadrature::tanh_sinh(f, a_pi - 0.5 * kPi, 0.5 * kPi, 1e-14);
  }
  if (!r.converged && r.error_estimate > 1e-12 * std::fabs(r.value)) {
    throw ConvergenceError("Mittag-Leffler integral did not converge at alpha = " + fmt(alpha) +
                           ", z = " + fmt(z));
  }
  const double integral = r.value / a_pi;
  if (z < 0.0) return integral;
  return std::exp(std::pow(z, inv)) / alpha - integral;
}

}  // namespace detail

double mittag_leffler(double alpha, double z) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("mittag_leffler alpha must lie in (0, 1], got " + fmt(alpha));
  }
  if (!std::isfinite(z)) throw DomainError("mittag_leffler argument must be finite");
  if (alpha == 1.0) {
    if (z > 709.0) throw RangeError("mittag_leffler overflows for z = " + fmt(z), 709.0);
    return std::exp(z);
  }
  if (z < kMittagLefflerLowerBound) {
    throw RangeError("mittag_leffler argument " + fmt(z) + " below validated bound " +
                         fmt(kMittagLefflerLowerBound),
                     kMittagLefflerLowerBound);
  }
  if (z > kMittagLefflerUpperBound) {
    throw RangeError("mittag_leffler argument " + fmt(z) + " above validated bound " +
                         fmt(kMittagLefflerUpperBound),
                     kMittagLefflerUpperBound);
  }
  if (z == 0.0) return 1.0;
  if (z > 0.0 && std::pow(z, 1.0 / alpha) > 700.0) {
    throw RangeError("mittag_leffler overflows: z^(1/alpha) = " + fmt(std::pow(z, 1.0 / alpha)),
                     std::pow(700.0, alpha));
  }
  if (z >= -1.0) {
    try {
      return detail::mittag_leffler_series(alpha, z);
    } catch (const ConvergenceError&) {
      // slow series for small alpha; fall through to the integral
    }
  }
  return detail::mittag_leffler_integral(alpha, z);
}

double prabhakar_function(const PrabhakarParams& p, double z) {
  p.validate();
  if (!std::isfinite(z)) throw DomainError("prabhakar_function argument must be finite");
  if (z == 0.0) return 1.0 / gamma_fn(p.beta);
  if (p.gamma == 1.0 && p.beta == 1.0 && p.alpha <= 1.0) return mittag_leffler(p.alpha, z);
  if (std::fabs(z) > kMittagLefflerUpperBound) {
    throw RangeError("prabhakar_function series validated only for |z| <= " +
                         fmt(kMittagLefflerUpperBound) + ", got z = " + fmt(z),
                     kMittagLefflerUpperBound);
  }
  const double scale = std::fabs(divide_by_gamma(1.0, p.beta));
  const auto k = series_truncation(p, std::fabs(z), 1e-17 * std::max(scale, 1e-300));
  const auto s = prabhakar_series(p, z, k.terms);
  if (s.abs_sum > 1e4 * std::fabs(s.value)) {
    throw RangeError("prabhakar_function series loses more than four digits to cancellation at z = " +
                         fmt(z),
                     std::fabs(z));
  }
  return s.value;
}

double prabhakar_kernel(const PrabhakarParams& p, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("prabhakar_kernel needs t > 0, got " + fmt(t));
  }
  const double power = p.beta == 1.0 ? 1.0 : std::pow(t, p.beta - 1.0);
  return power * prabhakar_function(p, p.omega * std::pow(t, p.alpha));
}

}  // namespace prabhakar
