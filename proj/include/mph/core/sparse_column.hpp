#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mph/core/field.hpp"

namespace mph {

struct Entry {
  std::uint32_t row = 0;
  Field::Elem coeff = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector over a prime field: strictly increasing row indices, no zero coefficients.
class SparseColumn {
 public:
  SparseColumn() = default;

  /// Builds a column from arbitrary (row, coeff) pairs: sorts, sums duplicates, drops zeros.
  static SparseColumn from_entries(std::vector<Entry> entries, const Field& field);
  /// Single entry e_row with coefficient 1.
  static SparseColumn unit(std::uint32_t row);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Largest row index with a nonzero coefficient.
  std::optional<std::uint32_t> pivot() const noexcept {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().row;
  }
  Field::Elem pivot_coeff() const noexcept { return entries_.empty() ? 0 : entries_.back().coeff; }
  Field::Elem coeff_at(std::uint32_t row) const noexcept;

  /// this += c * other
  void axpy(Field::Elem c, const SparseColumn& other, const Field& field);
  void scale(Field::Elem c, const Field& field);
  /// Appends an entry whose row exceeds every present row (used by builders).
  void push_back(std::uint32_t row, Field::Elem coeff);

  friend bool operator==(const SparseColumn&, const SparseColumn&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace mph
