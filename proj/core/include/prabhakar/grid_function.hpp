#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace prabhakar {

/// Function-space class a sampled function is declared to belong to. Operators
/// that act on f' need AC or H1.
enum class Smoothness { L1, H1, AC };

/// Samples f(a + i h), i = 0..N, optionally with samples of f'.
struct GridFunction {
  double a = 0.0;
  double h = 1.0;
  std::vector<double> values;
  std::optional<std::vector<double>> derivative;
  Smoothness smoothness = Smoothness::L1;
  /// Set on operator outputs whose f' was synthesized by finite differences.
  bool synthesized_derivative = false;

  std::size_t size() const { return values.size(); }
  std::size_t intervals() const { return values.empty() ? 0 : values.size() - 1; }
  double time(std::size_t i) const { return a + static_cast<double>(i) * h; }
  double end() const { return time(intervals()); }

  /// Throws DomainError unless N >= 1, h > 0 and every sample is finite.
  void validate() const;

  /// Same grid, new samples, no derivative.
  GridFunction with_values(std::vector<double> new_values) const;

  static GridFunction sample(const std::function<double(double)>& f, double a, double h,
                             std::size_t intervals, Smoothness smoothness = Smoothness::L1);
  static GridFunction sample(const std::function<double(double)>& f,
                             const std::function<double(double)>& derivative, double a,
                             double h, std::size_t intervals);
};

/// Number of steps of size h covering [a, end]; throws DomainError unless
/// (end - a) / h is an integer to 1e-9 relative.
std::size_t step_count(double a, double end, double h);

/// Central differences inside, second-order one-sided differences at the ends.
std::vector<double> finite_difference_derivative(const GridFunction& f);

}  // namespace prabhakar
