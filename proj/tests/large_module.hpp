#pragma once

#include <random>

#include "mph/present/presentation.hpp"

namespace mph::testing {

/// Presentation with `gens` generators and `rels` relations on an n x n integer grid; each
/// relation combines up to three generators born below it.
inline present::Presentation large_presentation(std::mt19937_64& rng, std::size_t gens, std::size_t rels, int n) {
  std::uniform_int_distribution<int> coord(0, n - 1);
  std::vector<Grade> rows(gens), cols(rels);
  for (auto& g : rows) g = {double(coord(rng)), double(coord(rng))};
  std::vector<SparseColumn> cs;
  Field f(2);
  std::uniform_int_distribution<std::size_t> pick(0, gens - 1);
  for (auto& c : cols) {
    std::vector<Entry> e;
    const std::size_t first = pick(rng);
    c = rows[first];
    e.push_back({static_cast<std::uint32_t>(first), 1});
    for (int k = 0; k < 2; ++k) {
      const std::size_t r = pick(rng);
      c = join(c, rows[r]);
      e.push_back({static_cast<std::uint32_t>(r), 1});
    }
    c.x = std::min<double>(n - 1, c.x + coord(rng) % 3);
    c.y = std::min<double>(n - 1, c.y + coord(rng) % 3);
    cs.push_back(SparseColumn::from_entries(std::move(e), f));
  }
  return {GradedMatrix(f, std::move(rows), std::move(cols), std::move(cs)).sorted_colex(), 0, {}};
}

}  // namespace mph::testing
