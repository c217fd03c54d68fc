#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace prabhakar::cli {

/// Fixed notation for 1e-4 <= |v| < 1e6, scientific otherwise, `digits`
/// significant digits either way. Zero prints as "0" and -0 as "0".
std::string format_number(double v, int digits = 12);

/// Minimal RFC-4180 writer: quotes fields containing commas, quotes or newlines.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out, int digits = 12) : out_(out), digits_(digits) {}

  void header(std::initializer_list<std::string> names);
  void header(const std::vector<std::string>& names);
  void row(std::initializer_list<double> values);
  void row(const std::vector<std::string>& fields);

  std::string number(double v) const { return format_number(v, digits_); }

 private:
  std::ostream& out_;
  int digits_;
};

std::string csv_escape(const std::string& field);

}  // namespace prabhakar::cli
