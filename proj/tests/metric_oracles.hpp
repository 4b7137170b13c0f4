#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "examples.hpp"
#include "mph/invariants/barcode.hpp"
#include "mph/invariants/signed_barcode.hpp"
#include "mph/metrics/bottleneck.hpp"
#include "mph/oracle/interleaving.hpp"

namespace mph::testing {

/// Minimum cost over every partial matching, by enumeration.
inline double exhaustive_bottleneck(const inv::Barcode1D& c, const inv::Barcode1D& d) {
  const double inf = std::numeric_limits<double>::infinity();
  double best = inf;
  std::vector<bool> used(d.size(), false);
  std::function<void(std::size_t, double)> go = [&](std::size_t i, double cost) {
    if (cost >= best) return;
    if (i == c.size()) {
      for (std::size_t j = 0; j < d.size(); ++j)
        if (!used[j]) cost = std::max(cost, metrics::interval_cost(d[j]));
      best = std::min(best, cost);
      return;
    }
    go(i + 1, std::max(cost, metrics::interval_cost(c[i])));
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      go(i + 1, std::max(cost, metrics::interval_cost(c[i], d[j])));
      used[j] = false;
    }
  };
  go(0, 0);
  return best;
}

inline inv::Barcode1D random_barcode(std::mt19937_64& rng, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::uniform_int_distribution<int> v(0, 12);
  std::bernoulli_distribution open(0.15);
  inv::Barcode1D out;
  for (std::size_t k = size(rng); k > 0; --k) {
    int a = v(rng), b = v(rng);
    if (a == b) ++b;
    if (a > b) std::swap(a, b);
    out.push_back({a * 0.5, open(rng) ? std::numeric_limits<double>::infinity() : b * 0.5});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Interleaving distance of two half-open rectangle modules (or zero, when absent) with
/// integer corners, by exhaustive morphism search on the half-step grid.
inline double oracle_rectangle_distance(const std::optional<inv::Rectangle>& a, const std::optional<inv::Rectangle>& b) {
  double top = 0;
  for (const auto* r : {&a, &b})
    if (*r) top = std::max({top, (*r)->hi.x, (*r)->hi.y});
  std::vector<double> xs;
  for (int k = 0; k <= static_cast<int>(2 * top); ++k) xs.push_back(k * 0.5);
  inv::GradeGrid grid(xs, xs);
  Field f(2);
  auto module = [&](const std::optional<inv::Rectangle>& r) {
    return r ? half_open_rectangle(grid, f, r->lo, r->hi) : oracle::ExplicitModule(grid, f);
  };
  std::vector<double> eps;
  for (int k = 0; k <= static_cast<int>(top); ++k) eps.push_back(k * 0.5);
  auto d = oracle::interleaving_search(module(a), module(b), eps);
  return d ? *d : std::numeric_limits<double>::infinity();
}

/// All half-open rectangles with corners in {0..n-1}^2 and lo < hi in both coordinates.
inline std::vector<inv::Rectangle> grid_rectangles(int n) {
  std::vector<inv::Rectangle> out;
  for (int lx = 0; lx < n; ++lx)
    for (int hx = lx + 1; hx < n; ++hx)
      for (int ly = 0; ly < n; ++ly)
        for (int hy = ly + 1; hy < n; ++hy) out.push_back({{double(lx), double(ly)}, {double(hx), double(hy)}, 1});
  return out;
}

/// Presentation of the direct sum of half-open rectangle modules.
inline GradedMatrix sum_of_rectangles(Field f, const std::vector<inv::Rectangle>& rects) {
  std::vector<Grade> rows, cols;
  std::vector<SparseColumn> cs;
  for (const auto& r : rects) {
    auto row = static_cast<std::uint32_t>(rows.size());
    rows.push_back(r.lo);
    if (std::isfinite(r.hi.x)) {
      cols.push_back({r.hi.x, r.lo.y});
      cs.push_back(SparseColumn::unit(row));
    }
    if (std::isfinite(r.hi.y)) {
      cols.push_back({r.lo.x, r.hi.y});
      cs.push_back(SparseColumn::unit(row));
    }
  }
  return GradedMatrix(f, rows, cols, cs).sorted_colex();
}

/// Rectangle with integer corners in [0, n], positive side lengths.
inline inv::Rectangle random_rectangle(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> u(0, n - 1);
  int a = u(rng), b = u(rng), c = u(rng), d = u(rng);
  if (a == b) b = a + 1;
  if (c == d) d = c + 1;
  return {{double(std::min(a, b)), double(std::min(c, d))}, {double(std::max(a, b)), double(std::max(c, d))}, 1};
}

}  // namespace mph::testing
