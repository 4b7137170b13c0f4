#include "mph/core/grade.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <system_error>

#include "mph/core/errors.hpp"

namespace mph {

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw ContractError("cannot format real");
  return std::string(buf, end);
}

double parse_real(std::string_view text, std::size_t line) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("not a number: '" + std::string(text) + "'", line);
  if (!std::isfinite(v)) throw ParseError("non-finite value: '" + std::string(text) + "'", line);
  return v;
}

std::string to_string(const Grade& g) { return "(" + format_real(g.x) + "," + format_real(g.y) + ")"; }

}  // namespace mph
