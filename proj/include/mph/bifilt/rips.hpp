#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mph/bifilt/points.hpp"

namespace mph::bifilt {

using Simplex = std::vector<std::uint32_t>;

/// Largest distance between two vertices of `s` (0 for a vertex).
double diameter(const DistanceMatrix& d, const Simplex& s);

/// Calls visit(simplex) for every clique of the graph {ij : d(i,j) <= r} with at most
/// max_dim + 1 vertices, in order of dimension, then lexicographically.
void for_each_clique(const DistanceMatrix& d, double r, int max_dim, const std::function<void(const Simplex&)>& visit);

/// The Rips complex at scale r, truncated at max_dim.
std::vector<Simplex> rips_complex(const DistanceMatrix& d, double r, int max_dim);

}  // namespace mph::bifilt
