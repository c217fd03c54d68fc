#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "prabhakar/fde.hpp"
#include "prabhakar/grid_function.hpp"

namespace prabhakar::cli {

/// A closed-form test function with its exact derivative.
struct BuiltinFunction {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;

  /// Samples f and f' on [a, a + N h], tagged AC.
  GridFunction sample(double a, double h, std::size_t intervals) const;
};

const std::vector<std::string>& builtin_function_names();
/// Throws UsageError listing the valid names.
BuiltinFunction builtin_function(const std::string& name);

const std::vector<std::string>& builtin_rhs_names();
/// decay: F = -y, const: F = 1, forced: F = -y + sin t; partials included.
Rhs builtin_rhs(const std::string& name);

}  // namespace prabhakar::cli
