#include "mph/oracle/verify.hpp"

#include "mph/invariants/hilbert.hpp"
#include "mph/invariants/rank.hpp"
#include "mph/invariants/signed_barcode.hpp"
#include "mph/oracle/exactness.hpp"
#include "mph/oracle/explicit_module.hpp"

namespace mph::oracle {

namespace {

std::string at(const inv::GradeGrid& g, std::size_t i, std::size_t j) { return to_string(g.grade(i, j)); }

}  // namespace

std::optional<Discrepancy> verify(const present::Presentation& p, unsigned threads) {
  const auto& matrix = p.matrix;
  auto grid = inv::GradeGrid::covering(matrix, true);
  auto m = module_from_presentation(matrix, grid);
  m.validate();
  RankTable table(m);
  const std::size_t nx = grid.nx(), ny = grid.ny();

  auto h = inv::hilbert_function(matrix, grid, threads);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      if (h.at(i, j) != m.dim({i, j}))
        return Discrepancy{"hilbert", "dim at " + at(grid, i, j) + ": fast " + std::to_string(h.at(i, j)) +
                                          ", oracle " + std::to_string(m.dim({i, j}))};

  auto ranks = inv::rank_invariant(matrix, grid, threads);
  for (std::size_t sj = 0; sj < ny; ++sj)
    for (std::size_t si = 0; si < nx; ++si)
      for (std::size_t tj = sj; tj < ny; ++tj)
        for (std::size_t ti = si; ti < nx; ++ti)
          if (ranks(si, sj, ti, tj) != table({si, sj}, {ti, tj}))
            return Discrepancy{"rank", "rank " + at(grid, si, sj) + " -> " + at(grid, ti, tj)};

  auto sb = inv::signed_barcode(ranks);
  std::vector<IndexRectangle> alpha = mobius_inversion(table);
  std::size_t pos = 0, neg = 0;
  for (const auto& a : alpha) {
    const auto lo = grid.grade(a.lo.i, a.lo.j), hi = grid.grade(a.hi.i, a.hi.j);
    const auto& list = a.multiplicity > 0 ? sb.positive : sb.negative;
    auto& k = a.multiplicity > 0 ? pos : neg;
    const auto mult = static_cast<std::size_t>(a.multiplicity > 0 ? a.multiplicity : -a.multiplicity);
    if (k >= list.size() || !(list[k] == inv::Rectangle{lo, hi, mult}))
      return Discrepancy{"signed-barcode", "rectangle " + to_string(lo) + " " + to_string(hi)};
    ++k;
  }
  if (pos != sb.positive.size() || neg != sb.negative.size())
    return Discrepancy{"signed-barcode", "extra rectangles in the fast result"};
  for (std::size_t sj = 0; sj < ny; ++sj)
    for (std::size_t si = 0; si < nx; ++si)
      for (std::size_t tj = sj; tj < ny; ++tj)
        for (std::size_t ti = si; ti < nx; ++ti)
          if (inv::signed_count(sb, grid.grade(si, sj), grid.grade(ti, tj)) !=
              static_cast<long>(table({si, sj}, {ti, tj})))
            return Discrepancy{"reconstruction", "pair " + at(grid, si, sj) + " -> " + at(grid, ti, tj)};

  auto minimal = present::minimize(p);
  if (!present::has_no_units(minimal.matrix)) return Discrepancy{"minimize", "unit entry left after minimization"};
  auto hm = inv::hilbert_function(minimal.matrix, grid, threads);
  if (hm.dims != h.dims) return Discrepancy{"minimize", "minimization changed the Hilbert function"};
  auto rm = inv::rank_invariant(minimal.matrix, grid, threads);
  for (std::size_t sj = 0; sj < ny; ++sj)
    for (std::size_t si = 0; si < nx; ++si)
      for (std::size_t tj = sj; tj < ny; ++tj)
        for (std::size_t ti = si; ti < nx; ++ti)
          if (rm(si, sj, ti, tj) != ranks(si, sj, ti, tj))
            return Discrepancy{"minimize", "minimization changed rank " + at(grid, si, sj) + " -> " + at(grid, ti, tj)};

  auto res = present::minimal_resolution(minimal);
  auto dd = res.d1.multiply(res.d2);
  if (!dd.is_zero()) return Discrepancy{"resolution", "d1 * d2 is not zero"};
  auto betti = present::betti_numbers(res);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const Grade z = grid.effective(i, j);
      long chi = 0;
      for (const auto& [g, n] : betti.b0) chi += grade_leq(g, z) ? static_cast<long>(n) : 0;
      for (const auto& [g, n] : betti.b1) chi -= grade_leq(g, z) ? static_cast<long>(n) : 0;
      for (const auto& [g, n] : betti.b2) chi += grade_leq(g, z) ? static_cast<long>(n) : 0;
      if (chi != static_cast<long>(m.dim({i, j})))
        return Discrepancy{"resolution", "Euler characteristic at " + at(grid, i, j)};
    }
  return std::nullopt;
}

}  // namespace mph::oracle
