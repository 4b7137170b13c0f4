#pragma once

#include <cstddef>
#include <vector>

#include "mph/core/grade.hpp"
#include "mph/invariants/grid.hpp"
#include "mph/invariants/rank.hpp"

namespace mph::inv {

/// Closed grid rectangle [lo, hi]; hi coordinates are +inf at sentinel indices.
struct Rectangle {
  Grade lo, hi;
  std::size_t multiplicity = 1;

  bool contains(const Grade& z) const noexcept { return grade_leq(lo, z) && grade_leq(z, hi); }
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

struct SignedBarcode {
  GradeGrid grid;
  std::vector<Rectangle> positive;
  std::vector<Rectangle> negative;
};

/// Minimal rectangle decomposition of the rank invariant by inclusion-exclusion over grid
/// neighbours; terms outside the grid are zero.
SignedBarcode signed_barcode(const RankInvariant& ranks);

/// Merges repeated rectangles and cancels rectangles occurring in both R and S.
SignedBarcode minimal_pair(SignedBarcode b);

/// #{R containing s and t} - #{S containing s and t}.
long signed_count(const SignedBarcode& b, const Grade& s, const Grade& t);

/// Half-open form [lo, hi'): each finite hi coordinate moves to the next grid value, or +inf
/// past the top of the grid.
Rectangle half_open(const Rectangle& r, const GradeGrid& grid);

}  // namespace mph::inv
