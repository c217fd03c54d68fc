#include "prabhakar/normalization.hpp"

#include <algorithm>
#include <cmath>

#include "prabhakar/errors.hpp"

namespace prabhakar {

NormalizationFn NormalizationFn::table(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) throw DomainError("normalization table needs at least two points");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [alpha, value] = points[i];
    if (!std::isfinite(alpha) || !std::isfinite(value) || !(value > 0.0)) {
      throw DomainError("normalization table entries must be finite with positive values");
    }
    if (i > 0 && !(alpha > points[i - 1].first)) {
      throw DomainError("normalization table orders must be distinct");
    }
  }
  if (points.front().first != 0.0 || points.back().first != 1.0) {
    throw DomainError("normalization table must span alpha in [0, 1]");
  }
  if (std::fabs(points.front().second - 1.0) > 1e-12 ||
      std::fabs(points.back().second - 1.0) > 1e-12) {
    throw DomainError("normalization must equal 1 at alpha = 0 and alpha = 1");
  }
  NormalizationFn fn;
  fn.kind_ = Kind::Table;
  fn.points_ = std::move(points);
  return fn;
}

double NormalizationFn::operator()(double alpha) const {
  if (kind_ == Kind::ConstantOne) return 1.0;
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("normalization is defined for alpha in [0, 1]");
  }
  auto upper = std::lower_bound(points_.begin(), points_.end(), alpha,
                                [](const auto& p, double x) { return p.first < x; });
  if (upper == points_.begin()) return upper->second;
  const auto lower = upper - 1;
  const double w = (alpha - lower->first) / (upper->first - lower->first);
  return lower->second + w * (upper->second - lower->second);
}

}  // namespace prabhakar
