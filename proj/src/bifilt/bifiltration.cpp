#include "mph/bifilt/bifiltration.hpp"

#include <algorithm>
#include <cmath>

#include "mph/core/errors.hpp"

namespace mph::bifilt {
namespace {

std::string describe(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<double> sorted_distinct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Grade> minimal_antichain(std::vector<Grade> grades) {
  std::sort(grades.begin(), grades.end(), [](const Grade& a, const Grade& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Grade> out;
  for (const auto& g : grades) {
    // sorted by x: g is dominated iff the last kept grade has y <= g.y
    if (!out.empty() && out.back().y <= g.y) continue;
    out.push_back(g);
  }
  return out;
}

bool born_by(const std::vector<Grade>& births, const Grade& z) {
  return std::any_of(births.begin(), births.end(), [&](const Grade& b) { return grade_leq(b, z); });
}

Bifiltration::Bifiltration(std::vector<BifiltSimplex> simplices, Axes axes) : axes_(std::move(axes)) {
  std::vector<double> xs, ys;
  for (auto& s : simplices) {
    if (s.vertices.empty()) throw ContractError("simplex without vertices");
    if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
        std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
      throw ContractError("simplex " + describe(s.vertices) + " has unsorted or repeated vertices");
    if (s.births.empty()) throw ContractError("simplex " + describe(s.vertices) + " has no birth");
    auto minimal = minimal_antichain(s.births);
    if (minimal.size() != s.births.size())
      throw ContractError("births of simplex " + describe(s.vertices) + " are not an antichain");
    s.births = std::move(minimal);
    for (const auto& b : s.births) {
      if (!std::isfinite(b.x) || !std::isfinite(b.y))
        throw ContractError("non-finite birth for simplex " + describe(s.vertices));
      xs.push_back(b.x);
      ys.push_back(b.y);
    }
    auto k = static_cast<std::size_t>(s.dimension());
    if (by_dim_.size() <= k) by_dim_.resize(k + 1);
    if (!index_.emplace(s.vertices, by_dim_[k].size()).second)
      throw ContractError("duplicate simplex " + describe(s.vertices));
    by_dim_[k].push_back(std::move(s));
  }
  for (std::size_t k = 1; k < by_dim_.size(); ++k) {
    for (const auto& s : by_dim_[k]) {
      for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
        Simplex facet = s.vertices;
        facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = index_.find(facet);
        if (it == index_.end())
          throw ContractError("face " + describe(facet) + " of " + describe(s.vertices) + " is missing");
        const auto& fb = by_dim_[k - 1][it->second].births;
        for (const auto& b : s.births)
          if (!born_by(fb, b))
            throw ContractError("face " + describe(facet) + " is born after " + describe(s.vertices) + " at " +
                                to_string(b));
      }
    }
  }
  xs_ = sorted_distinct(std::move(xs));
  ys_ = sorted_distinct(std::move(ys));
}

const std::vector<BifiltSimplex>& Bifiltration::simplices(int k) const {
  static const std::vector<BifiltSimplex> none;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t Bifiltration::size() const noexcept {
  std::size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

std::optional<std::size_t> Bifiltration::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Bifiltration::is_one_critical() const noexcept {
  for (const auto& d : by_dim_)
    for (const auto& s : d)
      if (s.births.size() != 1) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Bifiltration::complex_at(const Grade& z) const {
  std::vector<std::vector<std::size_t>> out(by_dim_.size());
  for (std::size_t k = 0; k < by_dim_.size(); ++k)
    for (std::size_t i = 0; i < by_dim_[k].size(); ++i)
      if (born_by(by_dim_[k][i].births, z)) out[k].push_back(i);
  return out;
}

namespace {

std::vector<double> bin_values(const std::vector<double>& present, std::size_t n) {
  if (present.empty()) return {};
  double lo = present.front(), hi = present.back();
  if (n == 1 || lo == hi) return {hi};
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  v.front() = lo;
  v.back() = hi;
  return v;
}

double snap_up(const std::vector<double>& bins, double v) {
  auto it = std::lower_bound(bins.begin(), bins.end(), v);
  return it == bins.end() ? bins.back() : *it;
}

}  // namespace

Bifiltration coarsen(const Bifiltration& b, const GridSpec& grid) {
  if (grid.nx == 0 || grid.ny == 0) throw ContractError("grid needs at least one value per axis");
  auto bx = bin_values(b.xs(), grid.nx);
  auto by = bin_values(b.ys(), grid.ny);
  std::vector<BifiltSimplex> out;
  for (int k = 0; k <= b.max_dimension(); ++k)
    for (const auto& s : b.simplices(k)) {
      std::vector<Grade> births;
      for (const auto& g : s.births) births.push_back({snap_up(bx, g.x), snap_up(by, g.y)});
      out.push_back({s.vertices, minimal_antichain(std::move(births))});
    }
  return Bifiltration(std::move(out), b.axes());
}

}  // namespace mph::bifilt
