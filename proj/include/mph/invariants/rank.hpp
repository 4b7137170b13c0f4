#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mph/core/graded_matrix.hpp"
#include "mph/invariants/grid.hpp"

namespace mph::inv {

/// Rank of M_s -> M_t for every pair of grid points s <= t.
class RankInvariant {
 public:
  RankInvariant() = default;
  RankInvariant(GradeGrid grid, std::vector<std::uint32_t> table);

  const GradeGrid& grid() const noexcept { return grid_; }
  /// ContractError unless (si, sj) <= (ti, tj) inside the grid.
  std::size_t operator()(std::size_t si, std::size_t sj, std::size_t ti, std::size_t tj) const;

 private:
  GradeGrid grid_;
  std::vector<std::uint32_t> table_;  // [flat(s) * size + flat(t)], zero below the diagonal
};

/// rank(s, t) = rank[G_s | R_t] - rank R_t, with G_s the unit columns of generators <= s
/// and R_t the relations <= t. Parallel over t.
RankInvariant rank_invariant(const GradedMatrix& p, const GradeGrid& grid, unsigned threads = 1);

}  // namespace mph::inv
