#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "isoprofile/claims.hpp"

namespace isoprofile {

std::string format_decimal(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  if (x == 0.0) return "0";
  const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const int precision = std::max(0, 11 - magnitude);
  char buffer[512];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x, std::chars_format::fixed, precision);
  std::string text(buffer, result.ptr);
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  if (text == "-0") text = "0";
  return text;
}

void write_figure_csv(std::ostream& out, const FigureTable& table) {
  out << "v,lhs,rhs,margin\n";
  for (const FigureRow& row : table.rows) {
    out << format_decimal(row.v) << ',' << format_decimal(row.lhs) << ',' << format_decimal(row.rhs)
        << ',' << format_decimal(row.margin) << '\n';
  }
}

}  // namespace isoprofile
