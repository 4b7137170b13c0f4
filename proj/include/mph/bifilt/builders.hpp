#pragma once

#include <optional>
#include <vector>

#include "mph/bifilt/bifiltration.hpp"
#include "mph/bifilt/points.hpp"

namespace mph::bifilt {

/// Degree-Rips bifiltration over (degree, radius). The degree axis is reversed: a simplex
/// present at degree threshold d is present at every d' <= d. Birth antichains come from a
/// radius sweep over the sorted edge lengths.
Bifiltration degree_rips(const DistanceMatrix& d, int max_dim, std::optional<GridSpec> grid = std::nullopt);

enum class Level { sub, super };

/// Function-Rips bifiltration: superlevel sets of `values` (axis reversed) or sublevel
/// sets, against the Rips radius. Always 1-critical.
Bifiltration function_rips(const DistanceMatrix& d, const std::vector<double>& values, Level level, int max_dim,
                           std::optional<GridSpec> grid = std::nullopt);

}  // namespace mph::bifilt
