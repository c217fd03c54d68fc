#pragma once

#include <utility>
#include <vector>

namespace prabhakar {

/// Normalization constant M(alpha) / B(alpha) of the CF and ABC operators.
/// Either identically one, or a table interpolated linearly in alpha. A table
/// must span [0, 1] and take the value 1 at both ends.
class NormalizationFn {
 public:
  enum class Kind { ConstantOne, Table };

  NormalizationFn() = default;

  static NormalizationFn constant_one() { return {}; }
  static NormalizationFn table(std::vector<std::pair<double, double>> points);

  double operator()(double alpha) const;
  Kind kind() const { return kind_; }
  const std::vector<std::pair<double, double>>& points() const { return points_; }

 private:
  Kind kind_ = Kind::ConstantOne;
  std::vector<std::pair<double, double>> points_;
};

}  // namespace prabhakar
