#pragma once

#include <random>
#include <vector>

#include "mph/core/graded_matrix.hpp"
#include "mph/oracle/dense.hpp"

namespace mph::testing {

inline SparseColumn col(std::initializer_list<std::pair<std::uint32_t, Field::Elem>> entries, const Field& f) {
  std::vector<Entry> e;
  for (auto [r, c] : entries) e.push_back({r, c});
  return SparseColumn::from_entries(std::move(e), f);
}

/// The minimal presentation matrix of the indecomposable module with Hilbert rows
/// (2,2,1,0), (2,1,0,0), (1,0,0,0).
inline GradedMatrix two_generator_relations(Field f = Field(2)) {
  return GradedMatrix(f, {{0, 0}, {0, 0}}, {{0, 2}, {0, 3}, {1, 1}, {2, 0}, {3, 0}},
                      {col({{0, 1}}, f), col({{1, 1}}, f), col({{0, 1}, {1, 1}}, f), col({{1, 1}}, f),
                       col({{0, 1}}, f)});
}

/// Dense submatrix of rows with grade <= z and columns with grade <= z.
inline oracle::Dense dense_at(const GradedMatrix& m, const Grade& z, bool restrict_rows = true) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.num_rows(); ++i)
    if (!restrict_rows || grade_leq(m.row_grade(i), z)) rows.push_back(i);
  for (std::size_t j = 0; j < m.num_cols(); ++j)
    if (grade_leq(m.col_grade(j), z)) cols.push_back(j);
  oracle::Dense d(m.field(), rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) d.at(a, b) = m.at(rows[a], cols[b]);
  return d;
}

inline oracle::Dense to_dense(const GradedMatrix& m) {
  oracle::Dense d(m.field(), m.num_rows(), m.num_cols());
  for (std::size_t j = 0; j < m.num_cols(); ++j)
    for (const auto& e : m.column(j).entries()) d.at(e.row, j) = e.coeff;
  return d;
}

inline Grade random_grade(std::mt19937_64& rng, int nx, int ny) {
  std::uniform_int_distribution<int> dx(0, nx - 1), dy(0, ny - 1);
  return {static_cast<double>(dx(rng)), static_cast<double>(dy(rng))};
}

/// Random homogeneous matrix on an integer grid: each admissible entry is nonzero with
/// probability `density`.
inline GradedMatrix random_graded(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols, int nx,
                                  int ny, double density = 0.5) {
  std::vector<Grade> rg, cg;
  for (std::size_t i = 0; i < rows; ++i) rg.push_back(random_grade(rng, nx, ny));
  for (std::size_t j = 0; j < cols; ++j) cg.push_back(random_grade(rng, nx, ny));
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<std::uint32_t> coeff(1, f.characteristic() - 1);
  std::vector<SparseColumn> cs;
  for (std::size_t j = 0; j < cols; ++j) {
    SparseColumn c;
    for (std::size_t i = 0; i < rows; ++i)
      if (grade_leq(rg[i], cg[j]) && coin(rng)) c.push_back(static_cast<std::uint32_t>(i), coeff(rng));
    cs.push_back(std::move(c));
  }
  return GradedMatrix(f, rg, cg, std::move(cs));
}

}  // namespace mph::testing
