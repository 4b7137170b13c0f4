#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mph/oracle/explicit_module.hpp"

namespace mph::oracle {

/// ContractError unless m is zero or an interval module: dimensions at most 1 on a
/// convex connected support, with every internal map inside the support nonzero.
void require_interval_module(const ExplicitModule& m);

/// Basis of Hom(M, N(shift)) where N(shift)_z = N_{z + shift(1,1)} in grid steps, zero
/// past the grid. Each basis element is returned as one matrix per grid point
/// (dim N_{z+shift} x dim M_z; empty where either side vanishes).
std::vector<std::vector<Dense>> hom_basis(const ExplicitModule& m, const ExplicitModule& n, std::size_t shift);

/// Whether M and N are interleaved by a shift of `shift` grid steps on both axes.
bool interleaved(const ExplicitModule& m, const ExplicitModule& n, std::size_t shift);

/// Least candidate epsilon admitting an interleaving. Both modules must be interval
/// modules on one grid whose two axes share a uniform step h; every candidate must be a
/// multiple of h. Returns nullopt if no candidate works.
std::optional<double> interleaving_search(const ExplicitModule& a, const ExplicitModule& b,
                                          const std::vector<double>& candidates);

}  // namespace mph::oracle
