#include "mph/present/presentation.hpp"

#include <algorithm>

#include "mph/core/errors.hpp"
#include "mph/core/reduction.hpp"

namespace mph::present {

GradedMatrix kernel_basis(const GradedMatrix& f) {
  f.check_homogeneous();
  std::vector<bool> zero_before(f.num_cols(), false);
  std::vector<Grade> grades;
  std::vector<SparseColumn> columns;
  sweep_x(f, true, [&](std::size_t, double X, std::span<const SweepColumn> pass) {
    for (const auto& sc : pass) {
      if (!sc.zero || zero_before[sc.col]) continue;
      zero_before[sc.col] = true;
      grades.push_back({X, f.col_grade(sc.col).y});
      columns.push_back(sc.combination);
    }
  });
  std::vector<Grade> rows(f.col_grades().begin(), f.col_grades().end());
  GradedMatrix k(f.field(), std::move(rows), std::move(grades), std::move(columns));
  auto order = k.colex_column_order();
  return k.select_columns(order);
}

std::vector<std::size_t> min_gens(const GradedMatrix& f) {
  f.check_homogeneous();
  std::vector<bool> keep(f.num_cols(), false);
  sweep_x(f, false, [&](std::size_t, double X, std::span<const SweepColumn> pass) {
    for (const auto& sc : pass)
      if (f.col_grade(sc.col).x == X && !sc.zero) keep[sc.col] = true;
  });
  std::vector<std::size_t> out;
  for (auto j : f.colex_column_order())
    if (keep[j]) out.push_back(j);
  return out;
}

Presentation presentation(const bifilt::ShortComplex& s, int hom, bifilt::Axes axes) {
  if (!s.g.multiply(s.f).is_zero()) throw ContractError("short complex: g.f is not zero");
  auto basis = kernel_basis(s.g);
  auto gens = min_gens(s.f);

  ColumnReducer reducer(s.f.field(), true);
  for (std::size_t c = 0; c < basis.num_cols(); ++c) {
    auto out = reducer.add(basis.column(c), static_cast<std::uint32_t>(c));
    if (out.column.empty()) throw ContractError("kernel basis is not linearly independent");
  }
  const Field& field = s.f.field();
  std::vector<Grade> col_grades;
  std::vector<SparseColumn> columns;
  for (auto j : gens) {
    auto out = reducer.reduce(s.f.column(j));
    if (!out.column.empty()) throw ContractError("image of f is not contained in ker g");
    out.combination.scale(field.neg(1), field);
    col_grades.push_back(s.f.col_grade(j));
    columns.push_back(std::move(out.combination));
  }
  std::vector<Grade> rows(basis.col_grades().begin(), basis.col_grades().end());
  return {GradedMatrix(field, std::move(rows), std::move(col_grades), std::move(columns)), hom, std::move(axes)};
}

bool has_no_units(const GradedMatrix& m) {
  for (std::size_t j = 0; j < m.num_cols(); ++j)
    for (const auto& e : m.column(j).entries())
      if (m.row_grade(e.row) == m.col_grade(j)) return false;
  return true;
}

namespace {

GradedMatrix drop_redundant_columns(const GradedMatrix& m) {
  auto keep = min_gens(m);
  return m.select_columns(keep);
}

}  // namespace

Presentation minimize(const Presentation& p) {
  const Field& field = p.field();
  auto m = drop_redundant_columns(p.matrix.sorted_colex());
  std::vector<Grade> rows(m.row_grades().begin(), m.row_grades().end());
  std::vector<Grade> cols(m.col_grades().begin(), m.col_grades().end());
  std::vector<SparseColumn> columns(m.columns().begin(), m.columns().end());
  std::vector<bool> row_alive(rows.size(), true), col_alive(cols.size(), true);

  for (;;) {
    std::size_t pj = cols.size();
    std::uint32_t pi = 0;
    for (std::size_t j = 0; j < cols.size() && pj == cols.size(); ++j) {
      if (!col_alive[j]) continue;
      for (const auto& e : columns[j].entries())
        if (rows[e.row] == cols[j]) {
          pj = j;
          pi = e.row;
          break;
        }
    }
    if (pj == cols.size()) break;
    const auto unit = columns[pj].coeff_at(pi);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k == pj || !col_alive[k]) continue;
      auto a = columns[k].coeff_at(pi);
      if (a == 0) continue;
      columns[k].axpy(field.neg(field.div(a, unit)), columns[pj], field);
    }
    col_alive[pj] = false;
    row_alive[pi] = false;
  }

  std::vector<std::size_t> row_keep, col_keep;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (row_alive[i]) row_keep.push_back(i);
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (col_alive[j]) col_keep.push_back(j);
  GradedMatrix reduced(field, std::move(rows), std::move(cols), std::move(columns));
  auto result = reduced.select_columns(col_keep).permute_rows(row_keep);
  return {drop_redundant_columns(result), p.hom, p.axes};
}

Resolution minimal_resolution(const Presentation& p) { return {p.matrix, kernel_basis(p.matrix)}; }

GradeCounts count_grades(std::span<const Grade> grades) {
  std::vector<Grade> sorted(grades.begin(), grades.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const Grade& a, const Grade& b) { return colex_compare(a, b) < 0; });
  GradeCounts out;
  for (const auto& g : sorted) {
    if (!out.empty() && out.back().first == g)
      ++out.back().second;
    else
      out.push_back({g, 1});
  }
  return out;
}

Betti betti_numbers(const Resolution& r) {
  return {count_grades(r.d1.row_grades()), count_grades(r.d1.col_grades()), count_grades(r.d2.col_grades())};
}

}  // namespace mph::present
