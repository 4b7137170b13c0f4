#include "mph/invariants/signed_barcode.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

namespace mph::inv {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double next_value(const std::vector<double>& values, double v) {
  if (v == inf) return inf;
  auto it = std::upper_bound(values.begin(), values.end(), v);
  return it == values.end() ? inf : *it;
}

}  // namespace

SignedBarcode signed_barcode(const RankInvariant& ranks) {
  const auto& grid = ranks.grid();
  const long nx = static_cast<long>(grid.nx()), ny = static_cast<long>(grid.ny());
  auto rank = [&](long si, long sj, long ti, long tj) -> long {
    if (si < 0 || sj < 0 || ti >= nx || tj >= ny) return 0;
    return static_cast<long>(ranks(si, sj, ti, tj));
  };
  static constexpr int ds[4][3] = {{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}};

  SignedBarcode out{grid, {}, {}};
  for (long sj = 0; sj < ny; ++sj)
    for (long si = 0; si < nx; ++si)
      for (long tj = sj; tj < ny; ++tj)
        for (long ti = si; ti < nx; ++ti) {
          long alpha = 0;
          for (const auto& a : ds)
            for (const auto& b : ds) alpha += a[2] * b[2] * rank(si - a[0], sj - a[1], ti + b[0], tj + b[1]);
          if (alpha == 0) continue;
          Rectangle r{grid.grade(si, sj), grid.grade(ti, tj), static_cast<std::size_t>(alpha > 0 ? alpha : -alpha)};
          (alpha > 0 ? out.positive : out.negative).push_back(r);
        }
  auto key = [](const Rectangle& r) { return std::tie(r.lo.x, r.lo.y, r.hi.x, r.hi.y); };
  auto by_key = [&](const Rectangle& a, const Rectangle& b) { return key(a) < key(b); };
  std::sort(out.positive.begin(), out.positive.end(), by_key);
  std::sort(out.negative.begin(), out.negative.end(), by_key);
  return out;
}

SignedBarcode minimal_pair(SignedBarcode b) {
  std::map<std::tuple<double, double, double, double>, long> alpha;
  for (const auto& r : b.positive) alpha[{r.lo.x, r.lo.y, r.hi.x, r.hi.y}] += static_cast<long>(r.multiplicity);
  for (const auto& r : b.negative) alpha[{r.lo.x, r.lo.y, r.hi.x, r.hi.y}] -= static_cast<long>(r.multiplicity);
  b.positive.clear();
  b.negative.clear();
  for (const auto& [k, a] : alpha) {
    if (a == 0) continue;
    const auto& [lx, ly, hx, hy] = k;
    Rectangle r{{lx, ly}, {hx, hy}, static_cast<std::size_t>(a > 0 ? a : -a)};
    (a > 0 ? b.positive : b.negative).push_back(r);
  }
  return b;
}

long signed_count(const SignedBarcode& b, const Grade& s, const Grade& t) {
  long count = 0;
  for (const auto& r : b.positive)
    if (r.contains(s) && r.contains(t)) count += static_cast<long>(r.multiplicity);
  for (const auto& r : b.negative)
    if (r.contains(s) && r.contains(t)) count -= static_cast<long>(r.multiplicity);
  return count;
}

Rectangle half_open(const Rectangle& r, const GradeGrid& grid) {
  return {r.lo, {next_value(grid.xs(), r.hi.x), next_value(grid.ys(), r.hi.y)}, r.multiplicity};
}

}  // namespace mph::inv
