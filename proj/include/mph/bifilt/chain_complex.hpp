#pragma once

#include <vector>

#include "mph/bifilt/bifiltration.hpp"
#include "mph/core/graded_matrix.hpp"

namespace mph::bifilt {

/// X --f--> Y --g--> Z of free modules; f has rows Y and columns X, g has rows Z and
/// columns Y.
struct ShortComplex {
  GradedMatrix f;
  GradedMatrix g;
};

/// Free chain complex F_0 <- F_1 <- ... <- F_top; boundary[k] maps F_{k+1} to F_k.
/// Every basis is colex sorted.
struct FreeChainComplex {
  Field field{2};
  Axes axes;
  std::vector<GradedMatrix> boundary;

  int top() const noexcept { return static_cast<int>(boundary.size()); }
  std::vector<Grade> basis(int k) const;
};

/// Free chain complex with the same pointwise homology as `b` in degrees < top.
/// A multicritical simplex contributes one generator per birth; consecutive copies are
/// identified by extra generators one degree up, born at the join of the two births.
FreeChainComplex free_chain_complex(const Bifiltration& b, int top, Field field = Field(2));

/// The three-term piece F_{i+1} -> F_i -> F_{i-1} (F_{-1} = 0).
ShortComplex short_complex(const FreeChainComplex& c, int i);
ShortComplex short_complex(const Bifiltration& b, int i, Field field = Field(2));

}  // namespace mph::bifilt
