#pragma once

#include <cstddef>
#include <vector>

#include "mph/core/grade.hpp"
#include "mph/core/graded_matrix.hpp"

namespace mph::inv {

/// Half-open interval [birth, death); death may be +inf.
struct Interval1D {
  double birth = 0;
  double death = 0;

  friend bool operator==(const Interval1D&, const Interval1D&) = default;
  friend auto operator<=>(const Interval1D&, const Interval1D&) = default;
};

using Barcode1D = std::vector<Interval1D>;  // sorted

struct Cell {
  double value = 0;
  int dim = 0;
  SparseColumn boundary;  // over earlier cells
};

/// Standard persistence pairing of a filtered complex given in filtration order. Returns
/// one barcode per dimension 0..max dim; zero-length intervals are dropped. ContractError
/// if the order is not a filtration or the boundary does not square to zero.
std::vector<Barcode1D> barcode_1d(const Field& field, const std::vector<Cell>& cells);

/// L(t) = b + t v with v >= (1, 1).
struct Line {
  Grade v{1, 1};
  Grade b{0, 0};

  friend bool operator==(const Line&, const Line&) = default;
};

/// Rescales v so its smaller component is 1. ContractError unless both components of v
/// are positive and all coordinates finite.
Line normalize_line(Line l);

/// Smallest t with L(t) >= g.
double push_to_line(const Grade& g, const Line& l);

/// Barcode of the restriction of coker(p) to the line.
Barcode1D slice_barcode(const GradedMatrix& p, const Line& l);

}  // namespace mph::inv
