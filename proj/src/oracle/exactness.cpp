#include "mph/oracle/exactness.hpp"

#include <algorithm>

#include "mph/core/errors.hpp"

namespace mph::oracle {
namespace {

template <class Check>
std::optional<SquareFailure> scan_squares(const ExplicitModule& m, Check&& check) {
  for (std::size_t y = 0; y < m.ny(); ++y)
    for (std::size_t x = 0; x < m.nx(); ++x)
      for (std::size_t y2 = y; y2 < m.ny(); ++y2)
        for (std::size_t x2 = x; x2 < m.nx(); ++x2) {
          Index a{x, y}, b{x, y2}, c{x2, y}, d{x2, y2};
          if (auto failed = check(a, b, c, d)) return SquareFailure{a, d, *failed};
        }
  return std::nullopt;
}

std::size_t dim_kernel(const Dense& m) { return m.cols() - rank(m); }

}  // namespace

std::optional<SquareFailure> middle_exactness_failure(const ExplicitModule& m) {
  const Field& f = m.field();
  return scan_squares(m, [&](Index a, Index b, Index c, Index d) -> std::optional<std::string> {
    auto ab = m.map(a, b), ac = m.map(a, c), bd = m.map(b, d), cd = m.map(c, d);
    Dense neg_cd = cd;
    for (std::size_t r = 0; r < neg_cd.rows(); ++r)
      for (std::size_t k = 0; k < neg_cd.cols(); ++k) neg_cd.at(r, k) = f.neg(neg_cd.at(r, k));
    std::size_t image = rank(ab.vcat(ac));
    std::size_t kernel = dim_kernel(bd.hcat(neg_cd));
    if (image != kernel) return "image of M_a in M_b+M_c differs from the kernel into M_d";
    return std::nullopt;
  });
}

std::optional<SquareFailure> weak_exactness_failure(const ExplicitModule& m) {
  return scan_squares(m, [&](Index a, Index b, Index c, Index d) -> std::optional<std::string> {
    auto ad = m.map(a, d), bd = m.map(b, d), cd = m.map(c, d), ab = m.map(a, b), ac = m.map(a, c);
    std::size_t meet = rank(bd) + rank(cd) - rank(bd.hcat(cd));
    if (rank(ad) != meet) return "Im(M_a->M_d) != Im(M_b->M_d) meet Im(M_c->M_d)";
    std::size_t sum = dim_kernel(ab) + dim_kernel(ac) - dim_kernel(ab.vcat(ac));
    if (dim_kernel(ad) != sum) return "Ker(M_a->M_d) != Ker(M_a->M_b) + Ker(M_a->M_c)";
    return std::nullopt;
  });
}

RankTable::RankTable(const ExplicitModule& m) : nx_(m.nx()), ny_(m.ny()), n_(m.nx() * m.ny()) {
  ranks_.assign(n_ * n_, 0);
  for (std::size_t sj = 0; sj < ny_; ++sj)
    for (std::size_t si = 0; si < nx_; ++si) {
      Index s{si, sj};
      // maps from s along the bottom row, then up each column
      std::vector<Dense> row{Dense::identity(m.field(), m.dim(s))};
      for (std::size_t i = si + 1; i < nx_; ++i) row.push_back(m.step_x({i - 1, sj}) * row.back());
      for (std::size_t i = si; i < nx_; ++i) {
        Dense cur = row[i - si];
        for (std::size_t j = sj; j < ny_; ++j) {
          if (j > sj) cur = m.step_y({i, j - 1}) * cur;
          ranks_[flat(s) * n_ + flat({i, j})] = rank(cur);
        }
      }
    }
}

std::vector<IndexRectangle> mobius_inversion(const RankTable& ranks) {
  const std::size_t nx = ranks.nx(), ny = ranks.ny();
  struct Pair {
    Index s, t;
    long alpha = 0;
  };
  std::vector<Pair> pairs;
  for (std::size_t sj = 0; sj < ny; ++sj)
    for (std::size_t si = 0; si < nx; ++si)
      for (std::size_t tj = sj; tj < ny; ++tj)
        for (std::size_t ti = si; ti < nx; ++ti) pairs.push_back({{si, sj}, {ti, tj}});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    auto sa = a.s.i + a.s.j, sb = b.s.i + b.s.j;
    if (sa != sb) return sa < sb;
    return a.t.i + a.t.j > b.t.i + b.t.j;
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto& p = pairs[k];
    long acc = static_cast<long>(ranks(p.s, p.t));
    for (std::size_t l = 0; l < k; ++l) {
      const auto& q = pairs[l];
      if (index_leq(q.s, p.s) && index_leq(p.t, q.t)) acc -= q.alpha;
    }
    p.alpha = acc;
  }
  std::vector<IndexRectangle> out;
  for (const auto& p : pairs)
    if (p.alpha != 0) out.push_back({p.s, p.t, p.alpha});
  std::sort(out.begin(), out.end());
  return out;
}

RectangleDecomposition rectangle_decompose(const ExplicitModule& m) {
  if (auto failure = weak_exactness_failure(m)) return {{}, failure};
  RankTable ranks(m);
  auto alpha = mobius_inversion(ranks);
  ExplicitModule rebuilt(m.grid(), m.field());
  for (const auto& r : alpha) {
    if (r.multiplicity < 0) throw ContractError("weakly exact module with a negative rectangle multiplicity");
    for (long k = 0; k < r.multiplicity; ++k) rebuilt = rebuilt + rectangle_module(m.grid(), m.field(), r.lo, r.hi);
  }
  RankTable again(rebuilt);
  for (std::size_t sj = 0; sj < m.ny(); ++sj)
    for (std::size_t si = 0; si < m.nx(); ++si)
      for (std::size_t tj = sj; tj < m.ny(); ++tj)
        for (std::size_t ti = si; ti < m.nx(); ++ti)
          if (ranks({si, sj}, {ti, tj}) != again({si, sj}, {ti, tj}))
            throw ContractError("rectangle sum does not reproduce the rank invariant");
  return {alpha, std::nullopt};
}

}  // namespace mph::oracle
