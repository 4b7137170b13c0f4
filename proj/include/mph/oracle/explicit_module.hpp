#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mph/core/graded_matrix.hpp"
#include "mph/invariants/grid.hpp"
#include "mph/oracle/dense.hpp"

namespace mph::oracle {

/// Grid index (i along x, j along y).
struct Index {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;
};

constexpr bool index_leq(const Index& a, const Index& b) noexcept { return a.i <= b.i && a.j <= b.j; }

/// A persistence module on a finite grid, stored pointwise: a dimension per grid point
/// and a matrix per cover relation.
class ExplicitModule {
 public:
  ExplicitModule() = default;
  /// Zero module on the grid.
  ExplicitModule(inv::GradeGrid grid, Field field);

  const inv::GradeGrid& grid() const noexcept { return grid_; }
  const Field& field() const noexcept { return field_; }
  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }

  std::size_t dim(Index p) const { return dims_[flat(p)]; }
  /// Map from p to p + e_x (resp. p + e_y).
  const Dense& step_x(Index p) const { return step_x_[flat(p)]; }
  const Dense& step_y(Index p) const { return step_y_[flat(p)]; }

  void set_dim(Index p, std::size_t d);
  void set_step_x(Index p, Dense m);
  void set_step_y(Index p, Dense m);

  /// Throws ContractError naming the first square that does not commute or the first
  /// matrix of the wrong shape.
  void validate() const;

  /// Composite along the staircase p -> (q.i, p.j) -> q. Requires p <= q.
  Dense map(Index p, Index q) const;

  /// Pointwise direct sum (same grid and field).
  ExplicitModule operator+(const ExplicitModule& other) const;

 private:
  std::size_t flat(Index p) const { return p.j * nx_ + p.i; }

  inv::GradeGrid grid_;
  Field field_{2};
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Dense> step_x_, step_y_;
};

/// Pointwise cokernel of a presentation matrix (rows generators, columns relations),
/// evaluated at every grid point (sentinel indices use the largest grid value).
ExplicitModule module_from_presentation(const GradedMatrix& presentation, const inv::GradeGrid& grid);

/// Interval module supported on the closed index rectangle [lo, hi].
ExplicitModule rectangle_module(const inv::GradeGrid& grid, Field field, Index lo, Index hi);

/// Interval module with the given support; ContractError unless it is an interval
/// (nonempty, convex, connected).
ExplicitModule interval_module(const inv::GradeGrid& grid, Field field, const std::vector<Index>& support);

/// Rank of M_p -> M_q along any staircase. ContractError if p is not <= q.
std::size_t rank_between(const ExplicitModule& m, Index p, Index q);

/// Rank of lim M|_I -> colim M|_I over an interval I of grid points.
std::size_t generalized_rank(const ExplicitModule& m, const std::vector<Index>& interval);

/// ContractError unless `points` is nonempty, convex and connected in the grid.
void require_interval(const std::vector<Index>& points, std::size_t nx, std::size_t ny);

}  // namespace mph::oracle
