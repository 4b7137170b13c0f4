#include "mph/bifilt/rips.hpp"

#include <algorithm>

namespace mph::bifilt {

double diameter(const DistanceMatrix& d, const Simplex& s) {
  double m = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) m = std::max(m, d(s[a], s[b]));
  return m;
}

void for_each_clique(const DistanceMatrix& d, double r, int max_dim,
                     const std::function<void(const Simplex&)>& visit) {
  const auto n = static_cast<std::uint32_t>(d.size());
  std::vector<std::vector<std::uint32_t>> up(n);  // neighbours with larger index
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (d(i, j) <= r) up[i].push_back(j);

  std::vector<Simplex> level;
  for (std::uint32_t i = 0; i < n; ++i) level.push_back({i});
  for (int k = 0; k <= max_dim && !level.empty(); ++k) {
    for (const auto& s : level) visit(s);
    if (k == max_dim) break;
    std::vector<Simplex> next;
    for (const auto& s : level) {
      for (auto v : up[s.back()]) {
        bool ok = std::all_of(s.begin(), s.end() - 1, [&](std::uint32_t u) { return d(u, v) <= r; });
        if (!ok) continue;
        auto t = s;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    level = std::move(next);
  }
}

std::vector<Simplex> rips_complex(const DistanceMatrix& d, double r, int max_dim) {
  std::vector<Simplex> out;
  for_each_clique(d, r, max_dim, [&](const Simplex& s) { out.push_back(s); });
  return out;
}

}  // namespace mph::bifilt
