#include "mph/bifilt/builders.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mph/core/errors.hpp"

namespace mph::bifilt {
namespace {

std::vector<Simplex> all_simplices(const DistanceMatrix& d, int max_dim) {
  if (max_dim < 0) throw ContractError("max dimension must be nonnegative");
  return rips_complex(d, std::numeric_limits<double>::infinity(), max_dim);
}

Bifiltration finish(std::vector<BifiltSimplex> simplices, Axes axes, const std::optional<GridSpec>& grid) {
  Bifiltration b(std::move(simplices), std::move(axes));
  return grid ? coarsen(b, *grid) : b;
}

}  // namespace

Bifiltration degree_rips(const DistanceMatrix& d, int max_dim, std::optional<GridSpec> grid) {
  if (grid && (grid->nx == 0 || grid->ny == 0)) throw ContractError("grid needs at least one value per axis");
  const auto simplices = all_simplices(d, max_dim);
  const std::size_t n = d.size();

  std::vector<double> diam(simplices.size());
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    diam[s] = diameter(d, simplices[s]);
    for (auto v : simplices[s]) incident[v].push_back(s);
  }
  std::vector<std::size_t> by_diam(simplices.size());
  std::iota(by_diam.begin(), by_diam.end(), std::size_t{0});
  std::stable_sort(by_diam.begin(), by_diam.end(), [&](std::size_t a, std::size_t b) { return diam[a] < diam[b]; });

  struct Edge {
    double len;
    std::uint32_t u, v;
  };
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({d(i, j), i, j});
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.len < b.len; });

  std::vector<double> radii{0.0};
  for (const auto& e : edges) radii.push_back(e.len);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  std::vector<long> deg(n, 0);
  std::vector<long> level(simplices.size(), 0);  // current max degree threshold, 0 = absent
  std::vector<std::vector<Grade>> births(simplices.size());
  std::vector<std::size_t> stamp(simplices.size(), 0);

  std::size_t next_edge = 0, next_simplex = 0;
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    const double r = radii[ri];
    std::vector<std::size_t> candidates;
    auto consider = [&](std::size_t s) {
      if (stamp[s] != ri + 1) {
        stamp[s] = ri + 1;
        candidates.push_back(s);
      }
    };
    while (next_edge < edges.size() && edges[next_edge].len == r) {
      const auto& e = edges[next_edge++];
      ++deg[e.u];
      ++deg[e.v];
      for (auto s : incident[e.u]) if (diam[s] <= r) consider(s);
      for (auto s : incident[e.v]) if (diam[s] <= r) consider(s);
    }
    while (next_simplex < by_diam.size() && diam[by_diam[next_simplex]] == r) consider(by_diam[next_simplex++]);
    std::sort(candidates.begin(), candidates.end());
    for (auto s : candidates) {
      long f = std::numeric_limits<long>::max();
      for (auto v : simplices[s]) f = std::min(f, deg[v] + 1);
      if (f > level[s]) {
        level[s] = f;
        births[s].push_back({negate_axis(static_cast<double>(f)), r});
      }
    }
  }

  std::vector<BifiltSimplex> out;
  out.reserve(simplices.size());
  for (std::size_t s = 0; s < simplices.size(); ++s) out.push_back({simplices[s], std::move(births[s])});
  return finish(std::move(out), Axes{"degree", "radius", true, false}, grid);
}

Bifiltration function_rips(const DistanceMatrix& d, const std::vector<double>& values, Level level, int max_dim,
                           std::optional<GridSpec> grid) {
  if (values.size() != d.size())
    throw ContractError("function has " + std::to_string(values.size()) + " values for " + std::to_string(d.size()) +
                        " points");
  if (grid && (grid->nx == 0 || grid->ny == 0)) throw ContractError("grid needs at least one value per axis");
  std::vector<BifiltSimplex> out;
  for (auto& s : all_simplices(d, max_dim)) {
    double a = values[s.front()];
    for (auto v : s) a = level == Level::super ? std::min(a, values[v]) : std::max(a, values[v]);
    Grade birth{level == Level::super ? negate_axis(a) : a, diameter(d, s)};
    out.push_back({std::move(s), {birth}});
  }
  return finish(std::move(out), Axes{"function", "radius", level == Level::super, false}, grid);
}

}  // namespace mph::bifilt
