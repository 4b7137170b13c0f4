#include "mph/metrics/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mph/core/errors.hpp"
#include "mph/core/parallel.hpp"
#include "mph/metrics/bottleneck.hpp"

namespace mph::metrics {

std::vector<inv::Line> sample_lines(const Grade& lo, const Grade& hi, std::size_t n) {
  std::vector<inv::Line> out;
  if (n == 0) return out;
  auto frac = [n](std::size_t k) { return n == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(n - 1); };
  for (std::size_t a = 0; a < n; ++a) {
    // angle pi/4 + delta; tan(pi/4 + delta) = (1 + tan delta) / (1 - tan delta) keeps the
    // diagonal exact and mirrored angles exactly mirrored
    const double delta = (frac(a) - 0.5) * std::numbers::pi / 4;
    const double t = std::tan(std::fabs(delta));
    const double r = (1 + t) / (1 - t);
    const Grade v = delta >= 0 ? Grade{1, r} : Grade{r, 1};
    for (std::size_t k = 0; k < n; ++k) {
      const double s = frac(k);
      Grade b{lo.x + s * (hi.x - lo.x), hi.y - s * (hi.y - lo.y)};
      out.push_back(inv::normalize_line({v, b}));
    }
  }
  return out;
}

std::pair<Grade, Grade> bounding_box(const GradedMatrix& p, const GradedMatrix& q) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Grade lo{inf, inf}, hi{-inf, -inf};
  auto take = [&](std::span<const Grade> gs) {
    for (const auto& g : gs) {
      lo = {std::min(lo.x, g.x), std::min(lo.y, g.y)};
      hi = {std::max(hi.x, g.x), std::max(hi.y, g.y)};
    }
  };
  for (const auto* m : {&p, &q}) {
    take(m->row_grades());
    take(m->col_grades());
  }
  if (lo.x > hi.x) return {{0, 0}, {0, 0}};
  return {lo, hi};
}

MatchingResult matching_distance(const GradedMatrix& p, const GradedMatrix& q, const std::vector<inv::Line>& lines,
                                 unsigned threads) {
  std::vector<double> values(lines.size());
  parallel_for(lines.size(), threads, [&](std::size_t k) {
    values[k] = bottleneck_1d(inv::slice_barcode(p, lines[k]), inv::slice_barcode(q, lines[k]));
  });
  MatchingResult best;
  for (std::size_t k = 0; k < lines.size(); ++k)
    if (k == 0 || values[k] > best.value) best = {values[k], lines[k]};
  return best;
}

MatchingResult matching_distance(const present::Presentation& p, const present::Presentation& q, std::size_t n,
                                 unsigned threads) {
  if (p.field().characteristic() != q.field().characteristic())
    throw ContractError("presentations are over different fields");
  const auto& a = p.axes;
  const auto& b = q.axes;
  if (a.x_name != b.x_name || a.y_name != b.y_name || a.x_reversed != b.x_reversed || a.y_reversed != b.y_reversed)
    throw ContractError("presentations have different axes");
  auto [lo, hi] = bounding_box(p.matrix, q.matrix);
  return matching_distance(p.matrix, q.matrix, sample_lines(lo, hi, n), threads);
}

inv::Barcode1D slice_rectangles(const std::vector<inv::Rectangle>& rects, const inv::Line& l) {
  inv::Barcode1D out;
  for (const auto& r : rects) {
    const double birth = inv::push_to_line(r.lo, l);
    const double death = std::min((r.hi.x - l.b.x) / l.v.x, (r.hi.y - l.b.y) / l.v.y);
    if (birth < death)
      for (std::size_t k = 0; k < r.multiplicity; ++k) out.push_back({birth, death});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mph::metrics
