#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mph/bifilt/rips.hpp"
#include "mph/core/grade.hpp"

namespace mph::bifilt {

/// Names and order direction of the two axes. A reversed axis is stored negated.
struct Axes {
  std::string x_name = "x";
  std::string y_name = "y";
  bool x_reversed = false;
  bool y_reversed = false;

  friend bool operator==(const Axes&, const Axes&) = default;
};

struct BifiltSimplex {
  Simplex vertices;           // sorted
  std::vector<Grade> births;  // antichain, sorted by x ascending

  int dimension() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

/// Number of grid values per axis for coarsening.
struct GridSpec {
  std::size_t nx = 0;
  std::size_t ny = 0;
};

/// Face-closed simplicial bifiltration with (possibly multicritical) birth antichains.
class Bifiltration {
 public:
  Bifiltration() = default;
  /// Validates antichains and face closure (ContractError otherwise) and groups the
  /// simplices by dimension, keeping their relative order.
  Bifiltration(std::vector<BifiltSimplex> simplices, Axes axes);

  const Axes& axes() const noexcept { return axes_; }
  int max_dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  /// Simplices of dimension k (empty for k outside the stored range).
  const std::vector<BifiltSimplex>& simplices(int k) const;
  std::size_t size() const noexcept;
  /// Index of the simplex with these vertices within its dimension, if present.
  std::optional<std::size_t> find(const Simplex& s) const;

  bool is_one_critical() const noexcept;
  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<double>& ys() const noexcept { return ys_; }

  /// The simplices present at z, by dimension, as indices.
  std::vector<std::vector<std::size_t>> complex_at(const Grade& z) const;

 private:
  Axes axes_;
  std::vector<std::vector<BifiltSimplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
  std::vector<double> xs_, ys_;
};

/// Minimal elements of a set of grades, duplicates removed, sorted by x.
std::vector<Grade> minimal_antichain(std::vector<Grade> grades);

/// True iff some grade in `births` is <= z.
bool born_by(const std::vector<Grade>& births, const Grade& z);

/// Snaps every birth up to the smallest of nx (resp. ny) evenly spaced values spanning
/// the stored range of that axis, then re-minimizes the birth antichains.
Bifiltration coarsen(const Bifiltration& b, const GridSpec& grid);

}  // namespace mph::bifilt
