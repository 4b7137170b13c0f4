#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <vector>

namespace mph::bifilt {

struct PointCloud {
  std::vector<std::vector<double>> points;
  std::optional<std::vector<double>> values;  // one scalar per point

  std::size_t size() const noexcept { return points.size(); }
  std::size_t dimension() const noexcept { return points.empty() ? 0 : points.front().size(); }
};

/// Symmetric, nonnegative, zero diagonal. The triangle inequality is not required.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Validates symmetry, the diagonal and nonnegativity of a dense n*n table.
  DistanceMatrix(std::size_t n, std::vector<double> dense);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

/// CSV, one point per line, '#' comments. With `function_column`, the last field is the
/// scalar value of the point.
PointCloud load_points(std::istream& in, bool function_column);
/// First line n, then the strict lower triangle row by row (a trailing zero diagonal is
/// accepted too). Fields separated by commas or whitespace.
DistanceMatrix load_distances(std::istream& in);
DistanceMatrix pairwise_distances(const PointCloud& cloud);

}  // namespace mph::bifilt
