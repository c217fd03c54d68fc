#pragma once

#include <string>
#include <vector>

#include "cli.hpp"

namespace prabhakar::cli {

/// One comparison between two evaluation paths of the same quantity.
struct CrosscheckCase {
  std::string subject;  ///< builtin function or rhs name
  double alpha = 0.0;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass() const { return discrepancy <= tolerance; }
};

/// --theorem 1-5 compare operator paths, 6 and 7 compare FDE solver paths.
/// Defaults reproduce the acceptance settings; flags narrow them.
std::vector<CrosscheckCase> crosscheck(int theorem, const RunConfig& config);

}  // namespace prabhakar::cli
