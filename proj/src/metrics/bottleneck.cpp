#include "mph/metrics/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace mph::metrics {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double gap(double a, double b) {
  if (a == b) return 0;  // includes inf - inf
  return std::fabs(a - b);
}

/// Hopcroft-Karp on a bipartite graph given by adjacency lists of the left side.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right, const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj), match_l_(left, none), match_r_(right, none), dist_(left) {}

  std::size_t run() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t u = 0; u < match_l_.size(); ++u)
        if (match_l_[u] == none && dfs(u)) ++size;
    return size;
  }
  const std::vector<std::size_t>& left_matches() const { return match_l_; }

 private:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < match_l_.size(); ++u) {
      dist_[u] = match_l_[u] == none ? 0 : none;
      if (match_l_[u] == none) q.push(u);
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj_[u]) {
        auto w = match_r_[v];
        if (w == none)
          found = true;
        else if (dist_[w] == none) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (auto v : adj_[u]) {
      auto w = match_r_[v];
      if (w == none || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_l_[u] = v;
        match_r_[v] = u;
        return true;
      }
    }
    dist_[u] = none;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> match_l_, match_r_, dist_;
};

}  // namespace

Matching bottleneck_matching(std::size_t n, std::size_t m, const std::function<double(std::size_t, std::size_t)>& pair,
                             const std::function<double(std::size_t)>& left,
                             const std::function<double(std::size_t)>& right) {
  // left vertices: the n elements, then m diagonal copies; right: the m elements, then n copies
  std::vector<double> pc(n * m);
  std::vector<double> lc(n), rc(m), candidates{0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) candidates.push_back(pc[i * m + j] = pair(i, j));
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(lc[i] = left(i));
  for (std::size_t j = 0; j < m; ++j) candidates.push_back(rc[j] = right(j));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto attempt = [&](double threshold, Matching* out) {
    std::vector<std::vector<std::size_t>> adj(n + m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j)
        if (pc[i * m + j] <= threshold) adj[i].push_back(j);
      if (lc[i] <= threshold) adj[i].push_back(m + i);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (rc[j] <= threshold) adj[n + j].push_back(j);
      for (std::size_t i = 0; i < n; ++i)
        if (pc[i * m + j] <= threshold) adj[n + j].push_back(m + i);
    }
    BipartiteMatcher matcher(n + m, n + m, adj);
    if (matcher.run() != n + m) return false;
    if (out) {
      out->pairs.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (matcher.left_matches()[i] < m) out->pairs.emplace_back(i, matcher.left_matches()[i]);
      out->cost = threshold;
    }
    return true;
  };

  Matching result;
  // the infinite candidate (if any) is last and always feasible
  std::size_t lo = 0, hi = candidates.size() - 1;
  if (!attempt(candidates[hi], nullptr)) return {{}, inf};
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (attempt(candidates[mid], nullptr))
      hi = mid;
    else
      lo = mid + 1;
  }
  attempt(candidates[lo], &result);
  return result;
}

double interval_cost(const inv::Interval1D& i, const inv::Interval1D& j) {
  return std::max(gap(i.birth, j.birth), gap(i.death, j.death));
}

double interval_cost(const inv::Interval1D& i) { return (i.death - i.birth) / 2; }

double bottleneck_1d(const inv::Barcode1D& c, const inv::Barcode1D& d) {
  return bottleneck_matching(
             c.size(), d.size(), [&](std::size_t i, std::size_t j) { return interval_cost(c[i], d[j]); },
             [&](std::size_t i) { return interval_cost(c[i]); }, [&](std::size_t j) { return interval_cost(d[j]); })
      .cost;
}

double interleaving_to_zero(const inv::Rectangle& a) {
  return std::min(a.hi.x - a.lo.x, a.hi.y - a.lo.y) / 2;
}

double interleaving_rectangles(const inv::Rectangle& a, const inv::Rectangle& b) {
  const double corners = std::max({gap(a.lo.x, b.lo.x), gap(a.lo.y, b.lo.y), gap(a.hi.x, b.hi.x), gap(a.hi.y, b.hi.y)});
  return std::min(corners, std::max(interleaving_to_zero(a), interleaving_to_zero(b)));
}

namespace {

std::vector<inv::Rectangle> expand(std::vector<inv::Rectangle> out, const std::vector<inv::Rectangle>& more) {
  out.insert(out.end(), more.begin(), more.end());
  std::vector<inv::Rectangle> flat;
  for (const auto& r : out)
    for (std::size_t k = 0; k < r.multiplicity; ++k) flat.push_back({r.lo, r.hi, 1});
  return flat;
}

}  // namespace

double bottleneck_rectangles(const std::vector<inv::Rectangle>& a, const std::vector<inv::Rectangle>& b) {
  auto x = expand(a, {}), y = expand(b, {});
  return bottleneck_matching(
             x.size(), y.size(), [&](std::size_t i, std::size_t j) { return interleaving_rectangles(x[i], y[j]); },
             [&](std::size_t i) { return interleaving_to_zero(x[i]); },
             [&](std::size_t j) { return interleaving_to_zero(y[j]); })
      .cost;
}

double bottleneck_signed(const inv::SignedBarcode& x, const inv::SignedBarcode& y) {
  return bottleneck_rectangles(expand(x.positive, y.negative), expand(y.positive, x.negative));
}

inv::SignedBarcode half_open(const inv::SignedBarcode& b) {
  inv::SignedBarcode out{b.grid, {}, {}};
  for (const auto& r : b.positive) out.positive.push_back(inv::half_open(r, b.grid));
  for (const auto& r : b.negative) out.negative.push_back(inv::half_open(r, b.grid));
  return out;
}

}  // namespace mph::metrics
