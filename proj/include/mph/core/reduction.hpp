#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mph/core/graded_matrix.hpp"

namespace mph {

/// Standard left-to-right column reduction (pivot = largest row index). Columns are fed
/// one at a time; each is reduced against the nonzero columns stored so far. When
/// tracking is on, every reduced column carries the combination of fed ids producing it.
class ColumnReducer {
 public:
  struct Outcome {
    SparseColumn column;       // reduced column (empty iff the input was in the span)
    SparseColumn combination;  // over ids; empty when tracking is off
  };

  ColumnReducer(Field field, bool track);

  /// Reduces `col` and stores it under `id` if nonzero.
  Outcome add(SparseColumn col, std::uint32_t id);
  /// Reduces without storing; the combination is over stored ids and excludes `col` itself.
  Outcome reduce(SparseColumn col) const;

  std::size_t rank() const noexcept { return stored_.size(); }
  /// Index into the fed order of the stored column owning `row` as pivot, if any.
  std::optional<std::uint32_t> owner_of(std::uint32_t row) const;
  const Field& field() const noexcept { return field_; }

 private:
  struct Stored {
    SparseColumn column;
    SparseColumn combination;
    std::uint32_t id;
  };
  void reduce_in_place(SparseColumn& col, SparseColumn* comb) const;

  Field field_;
  bool track_;
  std::vector<Stored> stored_;
  static constexpr std::uint32_t none = 0xffffffffu;
  std::vector<std::uint32_t> pivot_owner_;  // stored index by pivot row, or none
  std::uint32_t owner(std::uint32_t row) const noexcept { return row < pivot_owner_.size() ? pivot_owner_[row] : none; }
};

/// One column of an x-sweep pass.
struct SweepColumn {
  std::size_t col;        // index in the input matrix
  bool zero;              // reduced to zero within this pass
  SparseColumn reduced;   // reduced form within this pass
  SparseColumn combination;  // over input column indices; empty unless tracking
};

/// Bigraded sweep: for every distinct column x-value X (ascending), reduces the columns with
/// x <= X in colex order. Within such a pass the columns with y <= Y form a prefix, so a
/// single pass answers span questions at every grade (X, Y). `visit(x_index, X, pass)` is
/// called once per pass.
void sweep_x(const GradedMatrix& m, bool track,
             const std::function<void(std::size_t, double, std::span<const SweepColumn>)>& visit);

struct ReductionResult {
  GradedMatrix reduced;
  std::optional<GradedMatrix> slave;
};

/// Homogeneity-preserving bigraded reduction. Output column j is input column j reduced
/// against the columns of grade <= its grade that precede it in colex order; it is zero
/// iff input column j lies in their span. With tracking, reduced = input * slave.
ReductionResult reduce(const GradedMatrix& m, bool track_combinations);

}  // namespace mph
