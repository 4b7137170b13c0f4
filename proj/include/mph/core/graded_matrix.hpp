#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mph/core/field.hpp"
#include "mph/core/grade.hpp"
#include "mph/core/sparse_column.hpp"

namespace mph {

/// Monomial matrix: a sparse matrix over a prime field with a grade attached to every row
/// and column. Represents a morphism of free two-parameter modules, column j being the
/// image of the basis element of grade col_grades[j].
///
/// Homogeneity (row_grades[i] <= col_grades[j] for every nonzero (i, j)) is checked on
/// construction.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(Field field, std::vector<Grade> row_grades, std::vector<Grade> col_grades,
               std::vector<SparseColumn> columns);

  static GradedMatrix zero(Field field, std::vector<Grade> row_grades, std::vector<Grade> col_grades);
  static GradedMatrix identity(Field field, std::vector<Grade> grades);

  const Field& field() const noexcept { return field_; }
  std::size_t num_rows() const noexcept { return row_grades_.size(); }
  std::size_t num_cols() const noexcept { return col_grades_.size(); }
  std::span<const Grade> row_grades() const noexcept { return row_grades_; }
  std::span<const Grade> col_grades() const noexcept { return col_grades_; }
  const Grade& row_grade(std::size_t i) const { return row_grades_[i]; }
  const Grade& col_grade(std::size_t j) const { return col_grades_[j]; }
  const SparseColumn& column(std::size_t j) const { return columns_[j]; }
  std::span<const SparseColumn> columns() const noexcept { return columns_; }

  bool is_zero() const noexcept;
  std::size_t nonzeros() const noexcept;
  Field::Elem at(std::size_t row, std::size_t col) const { return columns_[col].coeff_at(static_cast<std::uint32_t>(row)); }

  /// Throws ContractError naming the first entry with row grade not <= column grade.
  void check_homogeneous() const;

  /// Column indices sorted colexicographically by grade, ties by index.
  std::vector<std::size_t> colex_column_order() const;
  std::vector<std::size_t> colex_row_order() const;
  bool is_colex_sorted() const;

  /// Stable colex sort of rows and columns.
  GradedMatrix sorted_colex() const;
  /// Keeps the listed columns in the given order.
  GradedMatrix select_columns(std::span<const std::size_t> cols) const;
  /// new row i = old row perm[i]; rows absent from perm must be zero.
  GradedMatrix permute_rows(std::span<const std::size_t> perm) const;
  GradedMatrix permute_columns(std::span<const std::size_t> perm) const { return select_columns(perm); }

  /// this * rhs. rhs's row grades must coincide with this matrix's column grades.
  GradedMatrix multiply(const GradedMatrix& rhs) const;

  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

 private:
  Field field_{2};
  std::vector<Grade> row_grades_;
  std::vector<Grade> col_grades_;
  std::vector<SparseColumn> columns_;
};

std::vector<std::size_t> colex_order(std::span<const Grade> grades);

}  // namespace mph
