#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace mph {

/// A point of the two-parameter index poset. Reversed-order axes are stored negated,
/// so the stored order is always the product order.
struct Grade {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Grade&, const Grade&) = default;
};

/// Product order: a.x <= b.x and a.y <= b.y.
constexpr bool grade_leq(const Grade& a, const Grade& b) noexcept {
  return a.x <= b.x && a.y <= b.y;
}

constexpr bool grade_less(const Grade& a, const Grade& b) noexcept {
  return grade_leq(a, b) && !(a == b);
}

constexpr bool comparable(const Grade& a, const Grade& b) noexcept {
  return grade_leq(a, b) || grade_leq(b, a);
}

/// Colexicographic order: y first, then x.
constexpr std::weak_ordering colex_compare(const Grade& a, const Grade& b) noexcept {
  if (a.y < b.y) return std::weak_ordering::less;
  if (b.y < a.y) return std::weak_ordering::greater;
  if (a.x < b.x) return std::weak_ordering::less;
  if (b.x < a.x) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

/// Colex order with ties broken by insertion index.
constexpr bool colex_less(const Grade& a, std::size_t ia, const Grade& b, std::size_t ib) noexcept {
  auto c = colex_compare(a, b);
  if (c != 0) return c < 0;
  return ia < ib;
}

constexpr Grade join(const Grade& a, const Grade& b) noexcept {
  return {a.x < b.x ? b.x : a.x, a.y < b.y ? b.y : a.y};
}

constexpr Grade meet(const Grade& a, const Grade& b) noexcept {
  return {a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y};
}

/// Axis reversal; never produces -0.0 so printed grades stay canonical.
constexpr double negate_axis(double v) noexcept { return v == 0.0 ? 0.0 : -v; }

/// Shortest decimal text that parses back to exactly the same double ("inf" for +inf).
std::string format_real(double v);

/// Parses a decimal real exactly as from_chars does; throws ParseError on junk.
double parse_real(std::string_view text, std::size_t line = 0);

std::string to_string(const Grade& g);

}  // namespace mph
