#include "mph/core/sparse_column.hpp"

#include <algorithm>

namespace mph {

SparseColumn SparseColumn::from_entries(std::vector<Entry> entries, const Field& field) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.row < b.row; });
  SparseColumn out;
  out.entries_.reserve(entries.size());
  for (const auto& e : entries) {
    Field::Elem c = e.coeff % field.characteristic();
    if (!out.entries_.empty() && out.entries_.back().row == e.row) {
      out.entries_.back().coeff = field.add(out.entries_.back().coeff, c);
      if (out.entries_.back().coeff == 0) out.entries_.pop_back();
    } else if (c != 0) {
      out.entries_.push_back({e.row, c});
    }
  }
  return out;
}

SparseColumn SparseColumn::unit(std::uint32_t row) {
  SparseColumn out;
  out.entries_.push_back({row, 1});
  return out;
}

Field::Elem SparseColumn::coeff_at(std::uint32_t row) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), row,
                             [](const Entry& e, std::uint32_t r) { return e.row < r; });
  return (it != entries_.end() && it->row == row) ? it->coeff : 0;
}

void SparseColumn::axpy(Field::Elem c, const SparseColumn& other, const Field& field) {
  if (c == 0 || other.entries_.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->row < b->row)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->row < a->row) {
      merged.push_back({b->row, field.mul(c, b->coeff)});
      ++b;
    } else {
      Field::Elem s = field.add(a->coeff, field.mul(c, b->coeff));
      if (s != 0) merged.push_back({a->row, s});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseColumn::scale(Field::Elem c, const Field& field) {
  c %= field.characteristic();
  if (c == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.coeff = field.mul(e.coeff, c);
}

void SparseColumn::push_back(std::uint32_t row, Field::Elem coeff) {
  if (coeff != 0) entries_.push_back({row, coeff});
}

}  // namespace mph
