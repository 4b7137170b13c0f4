#pragma once

#include <optional>
#include <string>

#include "mph/present/presentation.hpp"

namespace mph::oracle {

struct Discrepancy {
  std::string check;
  std::string detail;
};

/// Recomputes the fast-path invariants of `p` by brute force on its covering grid and
/// returns the first disagreement: Hilbert function, rank invariant, signed barcode
/// (against Möbius inversion and by reconstruction), minimal resolution and minimization.
std::optional<Discrepancy> verify(const present::Presentation& p, unsigned threads = 1);

}  // namespace mph::oracle
