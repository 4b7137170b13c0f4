#include "mph/core/graded_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mph/core/errors.hpp"

namespace mph {

std::vector<std::size_t> colex_order(std::span<const Grade> grades) {
  std::vector<std::size_t> order(grades.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return colex_compare(grades[a], grades[b]) < 0;
  });
  return order;
}

GradedMatrix::GradedMatrix(Field field, std::vector<Grade> row_grades, std::vector<Grade> col_grades,
                           std::vector<SparseColumn> columns)
    : field_(field),
      row_grades_(std::move(row_grades)),
      col_grades_(std::move(col_grades)),
      columns_(std::move(columns)) {
  if (columns_.size() != col_grades_.size())
    throw ContractError("graded matrix has " + std::to_string(columns_.size()) + " columns but " +
                        std::to_string(col_grades_.size()) + " column grades");
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& e : columns_[j].entries()) {
      if (e.row >= row_grades_.size())
        throw ContractError("column " + std::to_string(j) + " references row " + std::to_string(e.row) +
                            " of " + std::to_string(row_grades_.size()));
      if (e.coeff >= field_.characteristic())
        throw ContractError("coefficient out of range in column " + std::to_string(j));
    }
  }
  check_homogeneous();
}

GradedMatrix GradedMatrix::zero(Field field, std::vector<Grade> row_grades, std::vector<Grade> col_grades) {
  std::vector<SparseColumn> cols(col_grades.size());
  return GradedMatrix(field, std::move(row_grades), std::move(col_grades), std::move(cols));
}

GradedMatrix GradedMatrix::identity(Field field, std::vector<Grade> grades) {
  std::vector<SparseColumn> cols;
  cols.reserve(grades.size());
  for (std::size_t i = 0; i < grades.size(); ++i) cols.push_back(SparseColumn::unit(static_cast<std::uint32_t>(i)));
  auto rows = grades;
  return GradedMatrix(field, std::move(rows), std::move(grades), std::move(cols));
}

bool GradedMatrix::is_zero() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseColumn& c) { return c.empty(); });
}

std::size_t GradedMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void GradedMatrix::check_homogeneous() const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& e : columns_[j].entries()) {
      if (!grade_leq(row_grades_[e.row], col_grades_[j]))
        throw ContractError("non-homogeneous entry (" + std::to_string(e.row) + ", " + std::to_string(j) +
                            "): row grade " + to_string(row_grades_[e.row]) + " not <= column grade " +
                            to_string(col_grades_[j]));
    }
  }
}

std::vector<std::size_t> GradedMatrix::colex_column_order() const { return colex_order(col_grades_); }
std::vector<std::size_t> GradedMatrix::colex_row_order() const { return colex_order(row_grades_); }

bool GradedMatrix::is_colex_sorted() const {
  auto sorted = [](const std::vector<Grade>& g) {
    return std::is_sorted(g.begin(), g.end(),
                          [](const Grade& a, const Grade& b) { return colex_compare(a, b) < 0; });
  };
  return sorted(row_grades_) && sorted(col_grades_);
}

GradedMatrix GradedMatrix::sorted_colex() const {
  auto rows = colex_row_order();
  auto cols = colex_column_order();
  return permute_rows(rows).select_columns(cols);
}

GradedMatrix GradedMatrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<Grade> grades;
  std::vector<SparseColumn> picked;
  grades.reserve(cols.size());
  picked.reserve(cols.size());
  for (auto j : cols) {
    grades.push_back(col_grades_.at(j));
    picked.push_back(columns_.at(j));
  }
  return GradedMatrix(field_, row_grades_, std::move(grades), std::move(picked));
}

GradedMatrix GradedMatrix::permute_rows(std::span<const std::size_t> perm) const {
  constexpr auto absent = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> new_index(row_grades_.size(), absent);
  std::vector<Grade> grades;
  grades.reserve(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_index.at(perm[i]) = static_cast<std::uint32_t>(i);
    grades.push_back(row_grades_[perm[i]]);
  }
  std::vector<SparseColumn> cols;
  cols.reserve(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    std::vector<Entry> entries;
    entries.reserve(columns_[j].size());
    for (const auto& e : columns_[j].entries()) {
      if (new_index[e.row] == absent)
        throw ContractError("dropping row " + std::to_string(e.row) + " which is nonzero in column " +
                            std::to_string(j));
      entries.push_back({new_index[e.row], e.coeff});
    }
    cols.push_back(SparseColumn::from_entries(std::move(entries), field_));
  }
  return GradedMatrix(field_, std::move(grades), col_grades_, std::move(cols));
}

GradedMatrix GradedMatrix::multiply(const GradedMatrix& rhs) const {
  if (!(rhs.field_ == field_)) throw ContractError("matrix product over different fields");
  if (!std::equal(rhs.row_grades_.begin(), rhs.row_grades_.end(), col_grades_.begin(), col_grades_.end()))
    throw ContractError("matrix product: inner bases differ");
  std::vector<SparseColumn> cols;
  cols.reserve(rhs.num_cols());
  for (const auto& rc : rhs.columns_) {
    SparseColumn acc;
    for (const auto& e : rc.entries()) acc.axpy(e.coeff, columns_[e.row], field_);
    cols.push_back(std::move(acc));
  }
  return GradedMatrix(field_, row_grades_, rhs.col_grades_, std::move(cols));
}

}  // namespace mph
