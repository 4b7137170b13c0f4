#pragma once

#include <cstddef>
#include <vector>

#include "mph/core/graded_matrix.hpp"
#include "mph/invariants/grid.hpp"

namespace mph::inv {

struct HilbertFunction {
  GradeGrid grid;
  std::vector<std::size_t> dims;  // row-major by y: dims[j * nx + i]

  std::size_t at(std::size_t i, std::size_t j) const { return dims[j * grid.nx() + i]; }
};

/// dim M_z at every grid point for M = coker(p); sentinel indices use the largest value.
HilbertFunction hilbert_function(const GradedMatrix& p, const GradeGrid& grid, unsigned threads = 1);

}  // namespace mph::inv
