#include "mph/core/reduction.hpp"

#include <algorithm>

namespace mph {

ColumnReducer::ColumnReducer(Field field, bool track) : field_(field), track_(track) {}

namespace {

/// Dense scratch column with a bitset of nonzero rows. Additions cost the length of the
/// added column; the pivot only moves down, so it is found by scanning words downward.
struct Accumulator {
  std::vector<Field::Elem> value;
  std::vector<std::uint64_t> nonzero;
  std::size_t top_word = 0;

  void load(const SparseColumn& col) {
    const auto rows = static_cast<std::size_t>(*col.pivot()) + 1;
    if (value.size() < rows) {
      value.resize(rows, 0);
      nonzero.resize((rows + 63) / 64, 0);
    }
    for (const auto& e : col.entries()) set(e.row, e.coeff);
    top_word = (rows - 1) / 64;
  }
  void set(std::uint32_t row, Field::Elem v) {
    value[row] = v;
    const std::uint64_t bit = std::uint64_t{1} << (row % 64);
    if (v) nonzero[row / 64] |= bit;
    else nonzero[row / 64] &= ~bit;
  }
  void axpy(Field::Elem c, const SparseColumn& col, const Field& f) {
    if (f.characteristic() == 2) {
      for (const auto& e : col.entries()) {
        value[e.row] ^= 1;
        nonzero[e.row / 64] ^= std::uint64_t{1} << (e.row % 64);
      }
      return;
    }
    for (const auto& e : col.entries()) set(e.row, f.add(value[e.row], f.mul(c, e.coeff)));
  }
  std::optional<std::uint32_t> pivot() {
    for (;; --top_word) {
      if (nonzero[top_word])
        return static_cast<std::uint32_t>(top_word * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(nonzero[top_word])));
      if (top_word == 0) return std::nullopt;
    }
  }
  /// Extracts the column and leaves the scratch zeroed.
  SparseColumn drain() {
    SparseColumn out;
    for (std::size_t w = 0; w <= top_word && w < nonzero.size(); ++w)
      for (auto bits = nonzero[w]; bits; bits &= bits - 1) {
        const auto row = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        out.push_back(row, value[row]);
        value[row] = 0;
      }
    for (std::size_t w = 0; w <= top_word && w < nonzero.size(); ++w) nonzero[w] = 0;
    return out;
  }
};

}  // namespace

void ColumnReducer::reduce_in_place(SparseColumn& col, SparseColumn* comb) const {
  auto p = col.pivot();
  if (!p || owner(*p) == none) return;
  thread_local Accumulator acc;
  acc.load(col);
  while (auto q = acc.pivot()) {
    const auto k = owner(*q);
    if (k == none) break;
    const Stored& s = stored_[k];
    Field::Elem c = field_.neg(field_.div(acc.value[*q], s.column.pivot_coeff()));
    acc.axpy(c, s.column, field_);
    if (comb) comb->axpy(c, s.combination, field_);
  }
  col = acc.drain();
}

ColumnReducer::Outcome ColumnReducer::add(SparseColumn col, std::uint32_t id) {
  Outcome out{std::move(col), {}};
  if (track_) out.combination = SparseColumn::unit(id);
  reduce_in_place(out.column, track_ ? &out.combination : nullptr);
  if (auto p = out.column.pivot()) {
    if (*p >= pivot_owner_.size()) pivot_owner_.resize(*p + 1, none);
    pivot_owner_[*p] = static_cast<std::uint32_t>(stored_.size());
    stored_.push_back({out.column, out.combination, id});
  }
  return out;
}

ColumnReducer::Outcome ColumnReducer::reduce(SparseColumn col) const {
  Outcome out{std::move(col), {}};
  reduce_in_place(out.column, track_ ? &out.combination : nullptr);
  return out;
}

std::optional<std::uint32_t> ColumnReducer::owner_of(std::uint32_t row) const {
  const auto k = owner(row);
  if (k == none) return std::nullopt;
  return stored_[k].id;
}

void sweep_x(const GradedMatrix& m, bool track,
             const std::function<void(std::size_t, double, std::span<const SweepColumn>)>& visit) {
  std::vector<double> xs;
  xs.reserve(m.num_cols());
  for (const auto& g : m.col_grades()) xs.push_back(g.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const auto order = m.colex_column_order();

  std::vector<SweepColumn> pass;
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    const double X = xs[xi];
    ColumnReducer reducer(m.field(), track);
    pass.clear();
    for (auto j : order) {
      if (m.col_grade(j).x > X) continue;
      auto out = reducer.add(m.column(j), static_cast<std::uint32_t>(j));
      bool zero = out.column.empty();
      pass.push_back({j, zero, std::move(out.column), std::move(out.combination)});
    }
    visit(xi, X, pass);
  }
}

ReductionResult reduce(const GradedMatrix& m, bool track_combinations) {
  m.check_homogeneous();
  std::vector<SparseColumn> reduced(m.num_cols());
  std::vector<SparseColumn> slave(m.num_cols());
  sweep_x(m, track_combinations, [&](std::size_t, double X, std::span<const SweepColumn> pass) {
    for (const auto& sc : pass) {
      if (m.col_grade(sc.col).x != X) continue;
      reduced[sc.col] = sc.reduced;
      if (track_combinations) slave[sc.col] = sc.combination;
    }
  });
  std::vector<Grade> cols(m.col_grades().begin(), m.col_grades().end());
  std::vector<Grade> rows(m.row_grades().begin(), m.row_grades().end());
  ReductionResult result{GradedMatrix(m.field(), rows, cols, std::move(reduced)), std::nullopt};
  if (track_combinations) result.slave = GradedMatrix(m.field(), cols, cols, std::move(slave));
  return result;
}

}  // namespace mph
