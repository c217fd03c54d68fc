#include "builtins.hpp"

#include <cmath>

#include "cli.hpp"

namespace prabhakar::cli {
namespace {

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

GridFunction BuiltinFunction::sample(double a, double h, std::size_t intervals) const {
  return GridFunction::sample(f, df, a, h, intervals);
}

const std::vector<std::string>& builtin_function_names() {
  static const std::vector<std::string> names = {"const1", "t", "t2", "sin", "exp-decay"};
  return names;
}

BuiltinFunction builtin_function(const std::string& name) {
  if (name == "const1") return {name, [](double) { return 1.0; }, [](double) { return 0.0; }};
  if (name == "t") return {name, [](double t) { return t; }, [](double) { return 1.0; }};
  if (name == "t2") return {name, [](double t) { return t * t; }, [](double t) { return 2.0 * t; }};
  if (name == "sin") {
    return {name, [](double t) { return std::sin(t); }, [](double t) { return std::cos(t); }};
  }
  if (name == "exp-decay") {
    return {name, [](double t) { return std::exp(-t); }, [](double t) { return -std::exp(-t); }};
  }
  throw UsageError("unknown function '" + name + "'; valid: " + joined(builtin_function_names()));
}

const std::vector<std::string>& builtin_rhs_names() {
  static const std::vector<std::string> names = {"decay", "const", "forced"};
  return names;
}

Rhs builtin_rhs(const std::string& name) {
  auto zero = [](double, double) { return 0.0; };
  auto minus_one = [](double, double) { return -1.0; };
  if (name == "decay") return {[](double, double y) { return -y; }, zero, minus_one};
  if (name == "const") return {[](double, double) { return 1.0; }, zero, zero};
  if (name == "forced") {
    return {[](double t, double y) { return -y + std::sin(t); },
            [](double t, double) { return std::cos(t); }, minus_one};
  }
  throw UsageError("unknown rhs '" + name + "'; valid: " + joined(builtin_rhs_names()));
}

}  // namespace prabhakar::cli
