#include "taxfrontier/csv.hpp"

#include <charconv>
#include <cmath>

namespace taxfrontier {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

void CsvBuilder::comment(const std::string& text) {
  out_ += "# ";
  out_ += text;
  out_ += '\n';
}

void CsvBuilder::header(const std::vector<std::string>& names) {
  row(names);
}

void CsvBuilder::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

std::string CsvBuilder::str() const { return out_; }

std::string cell(double v) { return format_double(v); }

std::string cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

const std::vector<std::string> kWelfareHeader = {
    "c", "beta1", "beta2", "y1", "alpha", "U", "sigma_u", "V"};

std::vector<std::string> welfare_row(double c, double beta1, double beta2,
                                     std::optional<double> y1,
                                     std::optional<double> alpha,
                                     const WelfarePoint& w) {
  return {cell(c),     cell(beta1), cell(beta2), cell(y1),
          cell(alpha), cell(w.U),   cell(w.sigma_u), cell(w.V)};
}

const std::vector<std::string> kFrontierHeader = {
    "sweep_param", "c",     "beta1", "beta2",   "y1",
    "alpha",       "U",     "sigma_u", "V"};

std::vector<std::string> frontier_row(const FrontierSample& s) {
  std::vector<std::string> cells = {cell(s.sweep_param)};
  const auto base = welfare_row(s.welfare.c, s.beta1, s.beta2, s.y1, s.alpha,
                                s.welfare);
  cells.insert(cells.end(), base.begin(), base.end());
  return cells;
}

}  // namespace taxfrontier
