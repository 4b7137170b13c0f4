#include "mph/invariants/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mph/core/errors.hpp"
#include "mph/core/reduction.hpp"

namespace mph::inv {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void check_filtration(const Field& field, const std::vector<Cell>& cells) {
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& c = cells[j];
    if (j > 0 && c.value < cells[j - 1].value) throw ContractError("cells are not sorted by value");
    for (const auto& e : c.boundary.entries()) {
      if (e.row >= j) throw ContractError("boundary of cell " + std::to_string(j) + " refers to a later cell");
      if (cells[e.row].dim != c.dim - 1)
        throw ContractError("boundary of cell " + std::to_string(j) + " has a face of the wrong dimension");
    }
    if (c.dim < 2) continue;
    SparseColumn dd;
    for (const auto& e : c.boundary.entries()) dd.axpy(e.coeff, cells[e.row].boundary, field);
    if (!dd.empty()) throw ContractError("boundary of cell " + std::to_string(j) + " does not square to zero");
  }
}

}  // namespace

std::vector<Barcode1D> barcode_1d(const Field& field, const std::vector<Cell>& cells) {
  check_filtration(field, cells);
  int top = -1;
  for (const auto& c : cells) top = std::max(top, c.dim);
  std::vector<Barcode1D> out(static_cast<std::size_t>(top + 1));

  ColumnReducer reducer(field, false);
  std::vector<bool> killed(cells.size(), false), positive(cells.size(), false);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto r = reducer.add(cells[j].boundary, static_cast<std::uint32_t>(j));
    if (r.column.empty()) {
      positive[j] = true;
      continue;
    }
    const auto pivot = r.column.entries().back().row;
    killed[pivot] = true;
    if (cells[pivot].value < cells[j].value)
      out[static_cast<std::size_t>(cells[pivot].dim)].push_back({cells[pivot].value, cells[j].value});
  }
  for (std::size_t j = 0; j < cells.size(); ++j)
    if (positive[j] && !killed[j]) out[static_cast<std::size_t>(cells[j].dim)].push_back({cells[j].value, inf});
  for (auto& b : out) std::sort(b.begin(), b.end());
  return out;
}

Line normalize_line(Line l) {
  if (!std::isfinite(l.v.x) || !std::isfinite(l.v.y) || !std::isfinite(l.b.x) || !std::isfinite(l.b.y))
    throw ContractError("line coordinates must be finite");
  if (!(l.v.x > 0) || !(l.v.y > 0)) throw ContractError("line direction must have positive components");
  const double m = std::min(l.v.x, l.v.y);
  l.v = {l.v.x / m, l.v.y / m};
  return l;
}

double push_to_line(const Grade& g, const Line& l) {
  return std::max((g.x - l.b.x) / l.v.x, (g.y - l.b.y) / l.v.y);
}

Barcode1D slice_barcode(const GradedMatrix& p, const Line& l) {
  if (!(l.v.x >= 1) || !(l.v.y >= 1)) throw ContractError("line direction must be at least 1 in both coordinates");
  const std::size_t rows = p.num_rows(), cols = p.num_cols();
  std::vector<double> t(rows + cols);
  for (std::size_t i = 0; i < rows; ++i) t[i] = push_to_line(p.row_grade(i), l);
  for (std::size_t j = 0; j < cols; ++j) t[rows + j] = push_to_line(p.col_grade(j), l);

  std::vector<std::size_t> order(rows + cols);
  std::iota(order.begin(), order.end(), 0);
  // generators come first on ties because they are numbered first
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });

  // Reduce the anti-transpose (coboundaries of generators, latest first): the pairing is the
  // same, and only essential generators reduce to zero.
  const std::size_t n = order.size();
  std::vector<std::vector<Entry>> coboundary(rows);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] < rows) continue;
    for (const auto& entry : p.column(order[k] - rows).entries())
      coboundary[entry.row].push_back({static_cast<std::uint32_t>(n - 1 - k), entry.coeff});
  }
  Barcode1D bars;
  ColumnReducer reducer(p.field(), false);
  for (std::size_t k = n; k-- > 0;) {
    const auto g = order[k];
    if (g >= rows) continue;
    auto out = reducer.add(SparseColumn::from_entries(std::move(coboundary[g]), p.field()), static_cast<std::uint32_t>(g));
    if (out.column.empty()) {
      bars.push_back({t[g], inf});
      continue;
    }
    const double death = t[order[n - 1 - out.column.entries().back().row]];
    if (t[g] < death) bars.push_back({t[g], death});
  }
  std::sort(bars.begin(), bars.end());
  return bars;
}

}  // namespace mph::inv
