#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mph/core/field.hpp"

namespace mph::oracle {

using Vec = std::vector<Field::Elem>;

/// Row-major dense matrix over a prime field. Independent of the sparse core on purpose:
/// everything in the oracle is recomputed with plain Gaussian elimination.
class Dense {
 public:
  Dense() = default;
  Dense(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Dense identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field::Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Field::Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  Dense transpose() const;
  Dense operator*(const Dense& rhs) const;
  Vec apply(const Vec& v) const;
  /// [this | rhs]
  Dense hcat(const Dense& rhs) const;
  /// [this ; rhs]
  Dense vcat(const Dense& rhs) const;
  Dense select_columns(const std::vector<std::size_t>& cols) const;
  Dense select_rows(const std::vector<std::size_t>& rows) const;

  friend bool operator==(const Dense&, const Dense&) = default;

 private:
  Field field_{2};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field::Elem> data_;
};

struct Echelon {
  Dense rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Dense m);
std::size_t rank(const Dense& m);
/// Basis of {v : m v = 0}, as columns of the result (cols() x nullity).
Dense nullspace(const Dense& m);
/// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Dense& m, const Vec& b);
/// Indices of a maximal set of linearly independent columns, greedily from the left.
std::vector<std::size_t> independent_columns(const Dense& m);

}  // namespace mph::oracle
