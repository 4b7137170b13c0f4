#include "mph/invariants/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mph/core/errors.hpp"

namespace mph::inv {
namespace {

std::vector<double> normalized(std::vector<double> v) {
  for (double d : v)
    if (!std::isfinite(d)) throw ContractError("grid values must be finite");
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t floor_index(const std::vector<double>& v, double x) {
  auto it = std::upper_bound(v.begin(), v.end(), x);
  if (it == v.begin()) return GradeGrid::npos;
  return static_cast<std::size_t>(it - v.begin()) - 1;
}

}  // namespace

GradeGrid::GradeGrid(std::vector<double> xs, std::vector<double> ys, bool sentinel_x, bool sentinel_y)
    : xs_(normalized(std::move(xs))), ys_(normalized(std::move(ys))), sentinel_x_(sentinel_x), sentinel_y_(sentinel_y) {}

GradeGrid GradeGrid::covering(const GradedMatrix& m, bool sentinel) {
  std::vector<double> xs, ys;
  for (const auto& g : m.row_grades()) {
    xs.push_back(g.x);
    ys.push_back(g.y);
  }
  for (const auto& g : m.col_grades()) {
    xs.push_back(g.x);
    ys.push_back(g.y);
  }
  return GradeGrid(std::move(xs), std::move(ys), sentinel, sentinel);
}

GradeGrid GradeGrid::integer(std::size_t nx, std::size_t ny, bool sentinel) {
  std::vector<double> xs(nx), ys(ny);
  for (std::size_t i = 0; i < nx; ++i) xs[i] = static_cast<double>(i);
  for (std::size_t j = 0; j < ny; ++j) ys[j] = static_cast<double>(j);
  return GradeGrid(std::move(xs), std::move(ys), sentinel, sentinel);
}

double GradeGrid::x(std::size_t i) const {
  if (is_sentinel_x(i)) return std::numeric_limits<double>::infinity();
  return xs_.at(i);
}

double GradeGrid::y(std::size_t j) const {
  if (is_sentinel_y(j)) return std::numeric_limits<double>::infinity();
  return ys_.at(j);
}

Grade GradeGrid::effective(std::size_t i, std::size_t j) const {
  return {xs_.at(std::min(i, xs_.size() - 1)), ys_.at(std::min(j, ys_.size() - 1))};
}

std::size_t GradeGrid::floor_x(double v) const noexcept { return floor_index(xs_, v); }
std::size_t GradeGrid::floor_y(double v) const noexcept { return floor_index(ys_, v); }

bool GradeGrid::covers(const GradedMatrix& m) const {
  auto on = [](const std::vector<double>& v, double x) { return std::binary_search(v.begin(), v.end(), x); };
  auto ok = [&](const Grade& g) { return on(xs_, g.x) && on(ys_, g.y); };
  return std::all_of(m.row_grades().begin(), m.row_grades().end(), ok) &&
         std::all_of(m.col_grades().begin(), m.col_grades().end(), ok);
}

}  // namespace mph::inv
