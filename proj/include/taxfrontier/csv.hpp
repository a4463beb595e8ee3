#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxfrontier/frontier.hpp"
#include "taxfrontier/welfare.hpp"

namespace taxfrontier {

/// Locale-independent rendering with 6 significant digits ('.' decimal
/// separator, shortest of fixed/scientific).
std::string format_double(double v);

/// Accumulates '#' comment lines, one header line and data rows into a
/// deterministic CSV document.
class CsvBuilder {
 public:
  void comment(const std::string& text);
  void header(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::string out_;
};

std::string cell(double v);
std::string cell(const std::optional<double>& v);

/// Shared row schema: c, beta1, beta2, y1, alpha, U, sigma_u, V.
extern const std::vector<std::string> kWelfareHeader;

std::vector<std::string> welfare_row(double c, double beta1, double beta2,
                                     std::optional<double> y1,
                                     std::optional<double> alpha,
                                     const WelfarePoint& w);

/// Frontier rows prepend a sweep_param column to the shared schema.
extern const std::vector<std::string> kFrontierHeader;

std::vector<std::string> frontier_row(const FrontierSample& s);

}  // namespace taxfrontier
