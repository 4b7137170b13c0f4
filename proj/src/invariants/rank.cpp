#include "mph/invariants/rank.hpp"

#include <algorithm>
#include <numeric>

#include "mph/core/errors.hpp"
#include "mph/core/parallel.hpp"
#include "mph/core/reduction.hpp"

namespace mph::inv {

RankInvariant::RankInvariant(GradeGrid grid, std::vector<std::uint32_t> table)
    : grid_(std::move(grid)), table_(std::move(table)) {
  if (table_.size() != grid_.size() * grid_.size()) throw ContractError("rank table has the wrong size");
}

std::size_t RankInvariant::operator()(std::size_t si, std::size_t sj, std::size_t ti, std::size_t tj) const {
  const std::size_t nx = grid_.nx(), ny = grid_.ny();
  if (ti >= nx || tj >= ny || si > ti || sj > tj) throw ContractError("rank queried for a pair that is not s <= t");
  return table_[(sj * nx + si) * grid_.size() + tj * nx + ti];
}

RankInvariant rank_invariant(const GradedMatrix& p, const GradeGrid& grid, unsigned threads) {
  if (!grid.covers(p)) throw ContractError("grid does not cover the presentation");
  const std::size_t nx = grid.nx(), ny = grid.ny(), n = grid.size();
  std::vector<std::uint32_t> table(n * n, 0);
  if (grid.empty()) return RankInvariant(grid, std::move(table));

  std::vector<std::size_t> by_x(p.num_rows()), by_y(p.num_cols());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::stable_sort(by_x.begin(), by_x.end(),
                   [&](std::size_t a, std::size_t b) { return p.row_grade(a).x < p.row_grade(b).x; });
  std::iota(by_y.begin(), by_y.end(), 0);
  std::stable_sort(by_y.begin(), by_y.end(),
                   [&](std::size_t a, std::size_t b) { return p.col_grade(a).y < p.col_grade(b).y; });

  // For fixed t.x and s.y, rows with y <= s.y come first, sorted by x, so every G_s is a
  // prefix of length k(s). A vector of im R_t lies in span G_s iff it is a combination of
  // reduced columns with pivot below k(s), hence rank(s, t) = k(s) - #{pivots < k(s)}.
  parallel_for(nx * ny, threads, [&](std::size_t task) {
    const std::size_t ti = task % nx, sj = task / nx;
    const double tx = grid.effective(ti, 0).x, sy = grid.effective(0, sj).y;

    std::vector<std::uint32_t> position(p.num_rows());
    std::uint32_t next = 0;
    for (auto r : by_x)
      if (p.row_grade(r).y <= sy) position[r] = next++;
    const std::uint32_t low_rows = next;
    for (std::size_t r = 0; r < p.num_rows(); ++r)
      if (p.row_grade(r).y > sy) position[r] = next++;

    std::vector<std::uint32_t> low_rank;  // rows with y <= s.y, in by_x order
    low_rank.reserve(low_rows);
    for (auto r : by_x)
      if (p.row_grade(r).y <= sy) low_rank.push_back(static_cast<std::uint32_t>(r));
    std::vector<std::uint32_t> prefix(ti + 1);
    for (std::size_t si = 0, k = 0; si <= ti; ++si) {
      const double sx = grid.effective(si, 0).x;
      while (k < low_rank.size() && p.row_grade(low_rank[k]).x <= sx) ++k;
      prefix[si] = static_cast<std::uint32_t>(k);
    }

    // Fenwick tree over pivot positions below low_rows
    std::vector<std::uint32_t> fenwick(low_rows + 1, 0);
    auto count_below = [&](std::uint32_t k) {
      std::uint32_t total = 0;
      for (; k > 0; k -= k & (~k + 1)) total += fenwick[k];
      return total;
    };

    ColumnReducer reducer(p.field(), false);
    std::size_t c = 0;
    for (std::size_t tj = 0; tj < ny; ++tj) {
      const double ty = grid.effective(0, tj).y;
      for (; c < by_y.size() && p.col_grade(by_y[c]).y <= ty; ++c) {
        const auto col = by_y[c];
        if (p.col_grade(col).x > tx) continue;
        std::vector<Entry> entries;
        entries.reserve(p.column(col).size());
        for (const auto& e : p.column(col).entries()) entries.push_back({position[e.row], e.coeff});
        auto out = reducer.add(SparseColumn::from_entries(std::move(entries), p.field()),
                               static_cast<std::uint32_t>(col));
        if (auto pivot = out.column.pivot(); pivot && *pivot < low_rows)
          for (std::uint32_t k = *pivot + 1; k <= low_rows; k += k & (~k + 1)) ++fenwick[k];
      }
      if (tj < sj) continue;
      for (std::size_t si = 0; si <= ti; ++si)
        table[(sj * nx + si) * n + tj * nx + ti] = prefix[si] - count_below(prefix[si]);
    }
  });
  return RankInvariant(grid, std::move(table));
}

}  // namespace mph::inv
