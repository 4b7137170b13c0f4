#pragma once

#include <cstddef>
#include <vector>

#include "mph/core/graded_matrix.hpp"

namespace mph::inv {

/// Finite grid of grades. With a sentinel on an axis, one extra index past the largest
/// value stands for +inf; a finitely presented module is constant from its largest
/// grade on, so queries at the sentinel reuse the largest value.
class GradeGrid {
 public:
  GradeGrid() = default;
  GradeGrid(std::vector<double> xs, std::vector<double> ys, bool sentinel_x = false, bool sentinel_y = false);

  /// All coordinates of row and column grades of `m`.
  static GradeGrid covering(const GradedMatrix& m, bool sentinel);
  /// Integer grid {0..nx-1} x {0..ny-1}.
  static GradeGrid integer(std::size_t nx, std::size_t ny, bool sentinel = false);

  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<double>& ys() const noexcept { return ys_; }
  bool sentinel_x() const noexcept { return sentinel_x_; }
  bool sentinel_y() const noexcept { return sentinel_y_; }

  std::size_t nx() const noexcept { return xs_.size() + (sentinel_x_ && !xs_.empty() ? 1 : 0); }
  std::size_t ny() const noexcept { return ys_.size() + (sentinel_y_ && !ys_.empty() ? 1 : 0); }
  std::size_t size() const noexcept { return nx() * ny(); }
  bool empty() const noexcept { return size() == 0; }

  /// Coordinate of an index; +inf at a sentinel index.
  double x(std::size_t i) const;
  double y(std::size_t j) const;
  Grade grade(std::size_t i, std::size_t j) const { return {x(i), y(j)}; }
  /// Coordinate used for evaluating a module (sentinel maps to the largest value).
  Grade effective(std::size_t i, std::size_t j) const;
  bool is_sentinel_x(std::size_t i) const noexcept { return sentinel_x_ && i == xs_.size(); }
  bool is_sentinel_y(std::size_t j) const noexcept { return sentinel_y_ && j == ys_.size(); }

  /// Index of the largest grid value <= v, or nullopt-like npos when v is below the grid.
  std::size_t floor_x(double v) const noexcept;
  std::size_t floor_y(double v) const noexcept;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// True iff every row and column grade coordinate of `m` is a grid value.
  bool covers(const GradedMatrix& m) const;

  friend bool operator==(const GradeGrid&, const GradeGrid&) = default;

 private:
  std::vector<double> xs_, ys_;
  bool sentinel_x_ = false, sentinel_y_ = false;
};

}  // namespace mph::inv
