#include "mph/invariants/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "mph/core/errors.hpp"
#include "mph/core/parallel.hpp"
#include "mph/core/reduction.hpp"

namespace mph::inv {

HilbertFunction hilbert_function(const GradedMatrix& p, const GradeGrid& grid, unsigned threads) {
  if (!grid.covers(p)) throw ContractError("grid does not cover the presentation");
  const std::size_t nx = grid.nx(), ny = grid.ny();
  HilbertFunction h{grid, std::vector<std::size_t>(nx * ny, 0)};
  if (grid.empty()) return h;

  std::vector<std::size_t> cols(p.num_cols());
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(),
                   [&](std::size_t a, std::size_t b) { return p.col_grade(a).y < p.col_grade(b).y; });

  parallel_for(nx, threads, [&](std::size_t i) {
    const double x = grid.effective(i, 0).x;
    ColumnReducer reducer(p.field(), false);
    std::size_t next = 0;
    for (std::size_t j = 0; j < ny; ++j) {
      const double y = grid.effective(i, j).y;
      for (; next < cols.size() && p.col_grade(cols[next]).y <= y; ++next)
        if (p.col_grade(cols[next]).x <= x) reducer.add(p.column(cols[next]), static_cast<std::uint32_t>(cols[next]));
      std::size_t gens = 0;
      for (std::size_t r = 0; r < p.num_rows(); ++r) gens += grade_leq(p.row_grade(r), {x, y});
      h.dims[j * nx + i] = gens - reducer.rank();
    }
  });
  return h;
}

}  // namespace mph::inv
