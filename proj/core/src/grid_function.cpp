#include "prabhakar/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prabhakar/errors.hpp"

namespace prabhakar {

void GridFunction::validate() const {
  if (values.size() < 2) throw DomainError("grid function needs at least one interval");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid step must be finite and > 0");
  if (!std::isfinite(a)) throw DomainError("grid start must be finite");
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("grid function samples must be finite");
  }
  if (derivative) {
    if (derivative->size() != values.size()) {
      throw DomainError("derivative samples must match the value samples in length");
    }
    for (double v : *derivative) {
      if (!std::isfinite(v)) throw DomainError("derivative samples must be finite");
    }
  }
}

GridFunction GridFunction::with_values(std::vector<double> new_values) const {
  GridFunction out;
  out.a = a;
  out.h = h;
  out.values = std::move(new_values);
  return out;
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, double a, double h,
                                  std::size_t intervals, Smoothness smoothness) {
  GridFunction out;
  out.a = a;
  out.h = h;
  out.smoothness = smoothness;
  out.values.resize(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) out.values[i] = f(out.time(i));
  out.validate();
  return out;
}

GridFunction GridFunction::sample(const std::function<double(double)>& f,
                                  const std::function<double(double)>& derivative, double a,
                                  double h, std::size_t intervals) {
  GridFunction out = sample(f, a, h, intervals, Smoothness::AC);
  std::vector<double> d(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) d[i] = derivative(out.time(i));
  out.derivative = std::move(d);
  out.validate();
  return out;
}

std::size_t step_count(double a, double end, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("step must be finite and > 0");
  if (!(end > a)) throw DomainError("interval end must exceed its start");
  const double ratio = (end - a) / h;
  const double n = std::round(ratio);
  if (n < 1.0 || std::fabs(ratio - n) > 1e-9 * std::max(1.0, n)) {
    throw DomainError("interval length " + std::to_string(end - a) +
                      " is not an integer multiple of step " + std::to_string(h));
  }
  return static_cast<std::size_t>(n);
}

std::vector<double> finite_difference_derivative(const GridFunction& f) {
  f.validate();
  const auto& v = f.values;
  const std::size_t n = f.intervals();
  std::vector<double> d(v.size());
  if (n == 1) {
    d[0] = d[1] = (v[1] - v[0]) / f.h;
    return d;
  }
  const double inv2h = 0.5 / f.h;
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
  for (std::size_t i = 1; i < n; ++i) d[i] = (v[i + 1] - v[i - 1]) * inv2h;
  d[n] = (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) * inv2h;
  return d;
}

}  // namespace prabhakar
