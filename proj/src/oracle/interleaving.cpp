#include "mph/oracle/interleaving.hpp"

#include <algorithm>
#include <cmath>

#include "mph/core/errors.hpp"
#include "mph/oracle/exactness.hpp"

namespace mph::oracle {
namespace {

constexpr std::size_t max_enumeration = 1u << 16;

// Unknown blocks of a morphism M -> N(shift): one dim N_{z+shift} x dim M_z block per point.
struct Layout {
  std::size_t nx, ny, shift;
  std::vector<std::size_t> offset;  // per flat point; size nx*ny + 1
  std::vector<std::size_t> rows, cols;

  Layout(const ExplicitModule& m, const ExplicitModule& n, std::size_t s) : nx(m.nx()), ny(m.ny()), shift(s) {
    offset.push_back(0);
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i) {
        std::size_t r = 0;
        if (i + s < nx && j + s < ny) r = n.dim({i + s, j + s});
        std::size_t c = m.dim({i, j});
        if (r == 0 || c == 0) r = c = 0;
        rows.push_back(r);
        cols.push_back(c);
        offset.push_back(offset.back() + r * c);
      }
  }
  std::size_t flat(Index p) const { return p.j * nx + p.i; }
  std::size_t unknowns() const { return offset.back(); }
  bool shifted_inside(Index p) const { return p.i + shift < nx && p.j + shift < ny; }

  Dense block(const Vec& v, Index p, const ExplicitModule& m, const ExplicitModule& n) const {
    std::size_t r = shifted_inside(p) ? n.dim({p.i + shift, p.j + shift}) : 0;
    Dense out(m.field(), r, m.dim(p));
    const std::size_t k = flat(p);
    for (std::size_t a = 0; a < rows[k]; ++a)
      for (std::size_t b = 0; b < cols[k]; ++b) out.at(a, b) = v[offset[k] + a * cols[k] + b];
    return out;
  }
};

std::vector<Dense> blocks_of(const Layout& l, const Vec& v, const ExplicitModule& m, const ExplicitModule& n) {
  std::vector<Dense> out;
  for (std::size_t j = 0; j < l.ny; ++j)
    for (std::size_t i = 0; i < l.nx; ++i) out.push_back(l.block(v, {i, j}, m, n));
  return out;
}

// Map N(shift) along a cover step from p (x or y), zero once the shift leaves the grid.
Dense shifted_step(const ExplicitModule& n, const Layout& l, Index p, bool along_x) {
  Index q = along_x ? Index{p.i + 1, p.j} : Index{p.i, p.j + 1};
  std::size_t rows = l.shifted_inside(q) ? n.dim({q.i + l.shift, q.j + l.shift}) : 0;
  std::size_t cols = l.shifted_inside(p) ? n.dim({p.i + l.shift, p.j + l.shift}) : 0;
  if (rows == 0 || cols == 0) return Dense(n.field(), rows, cols);
  Index ps{p.i + l.shift, p.j + l.shift};
  return along_x ? n.step_x(ps) : n.step_y(ps);
}

// Internal map M_p -> M_{p + 2 shift}, zero past the grid.
Dense double_shift(const ExplicitModule& m, Index p, std::size_t shift) {
  Index q{p.i + 2 * shift, p.j + 2 * shift};
  if (q.i >= m.nx() || q.j >= m.ny()) return Dense(m.field(), 0, m.dim(p));
  return m.map(p, q);
}

}  // namespace

void require_interval_module(const ExplicitModule& m) {
  std::vector<Index> support;
  for (std::size_t j = 0; j < m.ny(); ++j)
    for (std::size_t i = 0; i < m.nx(); ++i) {
      if (m.dim({i, j}) > 1) throw ContractError("not an interval module: dimension above 1");
      if (m.dim({i, j}) == 1) support.push_back({i, j});
    }
  if (support.empty()) return;
  require_interval(support, m.nx(), m.ny());
  RankTable ranks(m);
  for (auto s : support)
    for (auto t : support)
      if (index_leq(s, t) && ranks(s, t) != 1) throw ContractError("not an interval module: vanishing internal map");
}

std::vector<std::vector<Dense>> hom_basis(const ExplicitModule& m, const ExplicitModule& n, std::size_t shift) {
  if (!(m.grid() == n.grid()) || !(m.field() == n.field())) throw ContractError("modules live on different grids");
  const Field& f = m.field();
  Layout l(m, n, shift);
  const std::size_t u = l.unknowns();

  std::vector<Vec> equations;
  auto add_edge = [&](Index p, bool along_x) {
    Index q = along_x ? Index{p.i + 1, p.j} : Index{p.i, p.j + 1};
    const Dense ns = shifted_step(n, l, p, along_x);  // N_{p+s} -> N_{q+s}
    const Dense& ms = along_x ? m.step_x(p) : m.step_y(p);
    const std::size_t kp = l.flat(p), kq = l.flat(q);
    // (ns * F_p - F_q * ms)[a][b] = 0 for a < dim N_{q+s}, b < dim M_p
    for (std::size_t a = 0; a < ns.rows(); ++a)
      for (std::size_t b = 0; b < m.dim(p); ++b) {
        Vec eq(u, 0);
        for (std::size_t c = 0; c < l.rows[kp]; ++c)
          eq[l.offset[kp] + c * l.cols[kp] + b] = f.add(eq[l.offset[kp] + c * l.cols[kp] + b], ns.at(a, c));
        if (l.rows[kq] > 0)
          for (std::size_t c = 0; c < l.cols[kq]; ++c)
            eq[l.offset[kq] + a * l.cols[kq] + c] = f.sub(eq[l.offset[kq] + a * l.cols[kq] + c], ms.at(c, b));
        if (std::any_of(eq.begin(), eq.end(), [](auto v) { return v != 0; })) equations.push_back(std::move(eq));
      }
  };
  for (std::size_t j = 0; j < l.ny; ++j)
    for (std::size_t i = 0; i < l.nx; ++i) {
      if (i + 1 < l.nx) add_edge({i, j}, true);
      if (j + 1 < l.ny) add_edge({i, j}, false);
    }
  Dense system(f, equations.size(), u);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (std::size_t c = 0; c < u; ++c) system.at(r, c) = equations[r][c];
  Dense basis = nullspace(system);
  std::vector<std::vector<Dense>> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) out.push_back(blocks_of(l, basis.column(k), m, n));
  return out;
}

bool interleaved(const ExplicitModule& m, const ExplicitModule& n, std::size_t shift) {
  const Field& f = m.field();
  auto hf = hom_basis(m, n, shift);
  auto hg = hom_basis(n, m, shift);
  std::size_t combos = 1;
  for (std::size_t k = 0; k < hf.size(); ++k) {
    combos *= f.characteristic();
    if (combos > max_enumeration) throw ContractError("Hom space too large to enumerate");
  }
  const std::size_t nx = m.nx(), ny = m.ny();
  auto flat = [&](Index p) { return p.j * nx + p.i; };
  auto inside = [&](Index p) { return p.i < nx && p.j < ny; };

  std::vector<std::size_t> digits(hf.size(), 0);
  for (std::size_t combo = 0; combo < combos; ++combo) {
    std::size_t c = combo;
    for (auto& d : digits) {
      d = c % f.characteristic();
      c /= f.characteristic();
    }
    std::vector<Dense> fz(nx * ny);
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i) {
        Index p{i, j};
        std::size_t r = (i + shift < nx && j + shift < ny) ? n.dim({i + shift, j + shift}) : 0;
        Dense acc(f, r, m.dim(p));
        for (std::size_t k = 0; k < hf.size(); ++k) {
          if (digits[k] == 0) continue;
          const Dense& b = hf[k][flat(p)];
          for (std::size_t a = 0; a < b.rows(); ++a)
            for (std::size_t e = 0; e < b.cols(); ++e)
              acc.at(a, e) = f.add(acc.at(a, e), f.mul(static_cast<Field::Elem>(digits[k]), b.at(a, e)));
        }
        fz[flat(p)] = std::move(acc);
      }

    // linear system in the coefficients of g over hg
    std::vector<Vec> rows;
    Vec rhs;
    auto push = [&](const std::vector<Dense>& per_basis, const Dense& target) {
      for (std::size_t a = 0; a < target.rows(); ++a)
        for (std::size_t e = 0; e < target.cols(); ++e) {
          Vec row(hg.size(), 0);
          for (std::size_t k = 0; k < hg.size(); ++k)
            row[k] = per_basis[k].rows() ? per_basis[k].at(a, e) : 0;
          rows.push_back(std::move(row));
          rhs.push_back(target.at(a, e));
        }
    };
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i) {
        Index p{i, j};
        // g_{p+s} f_p = M(p -> p + 2s)
        if (m.dim(p) > 0) {
          Dense target = double_shift(m, p, shift);
          if (target.rows() > 0) {
            Index q{i + shift, j + shift};
            std::vector<Dense> per;
            for (std::size_t k = 0; k < hg.size(); ++k) {
              const Dense& g = hg[k][flat(q)];
              per.push_back(g.rows() && fz[flat(p)].rows() ? g * fz[flat(p)] : Dense(f, target.rows(), target.cols()));
            }
            push(per, target);
          }
        }
        // f_{p+s} g_p = N(p -> p + 2s)
        if (n.dim(p) > 0) {
          Dense target = double_shift(n, p, shift);
          if (target.rows() > 0) {
            Index q{i + shift, j + shift};
            std::vector<Dense> per;
            for (std::size_t k = 0; k < hg.size(); ++k) {
              const Dense& g = hg[k][flat(p)];
              const Dense& fq = fz[flat(q)];
              per.push_back(g.rows() && inside(q) && fq.rows() ? fq * g : Dense(f, target.rows(), target.cols()));
            }
            push(per, target);
          }
        }
      }
    Dense system(f, rows.size(), hg.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < hg.size(); ++k) system.at(r, k) = rows[r][k];
    if (solve(system, rhs)) return true;
  }
  return false;
}

std::optional<double> interleaving_search(const ExplicitModule& a, const ExplicitModule& b,
                                          const std::vector<double>& candidates) {
  require_interval_module(a);
  require_interval_module(b);
  const auto& xs = a.grid().xs();
  const auto& ys = a.grid().ys();
  if (xs.size() < 2 || ys.size() < 2) throw ContractError("interleaving search needs at least a 2x2 grid");
  const double h = xs[1] - xs[0];
  for (std::size_t k = 1; k < xs.size(); ++k)
    if (xs[k] - xs[k - 1] != h) throw ContractError("grid x values are not uniformly spaced");
  for (std::size_t k = 1; k < ys.size(); ++k)
    if (ys[k] - ys[k - 1] != h) throw ContractError("grid y values do not share the x spacing");
  std::vector<double> sorted(candidates);
  std::sort(sorted.begin(), sorted.end());
  for (double eps : sorted) {
    double steps = eps / h;
    if (eps < 0 || steps != std::floor(steps)) throw ContractError("epsilon is not a multiple of the grid step");
    if (interleaved(a, b, static_cast<std::size_t>(steps))) return eps;
  }
  return std::nullopt;
}

}  // namespace mph::oracle
