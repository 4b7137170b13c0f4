#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mph/bifilt/bifiltration.hpp"
#include "mph/bifilt/chain_complex.hpp"
#include "mph/core/graded_matrix.hpp"

namespace mph::present {

/// F1 -> F0 with cokernel M: rows are generators, columns are relations.
struct Presentation {
  GradedMatrix matrix;
  int hom = 0;
  bifilt::Axes axes;

  const Field& field() const noexcept { return matrix.field(); }
  std::size_t generators() const noexcept { return matrix.num_rows(); }
  std::size_t relations() const noexcept { return matrix.num_cols(); }
};

/// F2 --d2--> F1 --d1--> F0.
struct Resolution {
  GradedMatrix d1;
  GradedMatrix d2;
};

using GradeCounts = std::vector<std::pair<Grade, std::size_t>>;  // colex sorted, positive counts

struct Betti {
  GradeCounts b0, b1, b2;
};

/// Basis of the free module ker f, columns expressed over f's columns; colex sorted.
GradedMatrix kernel_basis(const GradedMatrix& f);

/// Indices (colex order) of a minimal subset of f's columns generating im f.
std::vector<std::size_t> min_gens(const GradedMatrix& f);

/// Presentation of ker g / im f. Rows are a kernel basis of g, columns a minimal set of
/// generators of im f written in that basis. Throws ContractError if g.f != 0.
Presentation presentation(const bifilt::ShortComplex& s, int hom = 0, bifilt::Axes axes = {});

/// Drops redundant relations and cancels units between equal row and column grades.
Presentation minimize(const Presentation& p);

/// True iff no nonzero entry joins a row and a column of the same grade.
bool has_no_units(const GradedMatrix& m);

Resolution minimal_resolution(const Presentation& p);

GradeCounts count_grades(std::span<const Grade> grades);
Betti betti_numbers(const Resolution& r);

}  // namespace mph::present
