#include "mph/oracle/explicit_module.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mph/core/errors.hpp"

namespace mph::oracle {
namespace {

std::string describe(Index p) { return "[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]"; }

}  // namespace

ExplicitModule::ExplicitModule(inv::GradeGrid grid, Field field)
    : grid_(std::move(grid)), field_(field), nx_(grid_.nx()), ny_(grid_.ny()) {
  dims_.assign(nx_ * ny_, 0);
  step_x_.assign(nx_ * ny_, Dense(field_, 0, 0));
  step_y_.assign(nx_ * ny_, Dense(field_, 0, 0));
}

void ExplicitModule::set_dim(Index p, std::size_t d) {
  dims_.at(flat(p)) = d;
  // keep adjacent steps shape-consistent until they are set explicitly
  step_x_[flat(p)] = Dense(field_, p.i + 1 < nx_ ? dims_[flat({p.i + 1, p.j})] : 0, d);
  step_y_[flat(p)] = Dense(field_, p.j + 1 < ny_ ? dims_[flat({p.i, p.j + 1})] : 0, d);
  if (p.i > 0) step_x_[flat({p.i - 1, p.j})] = Dense(field_, d, dims_[flat({p.i - 1, p.j})]);
  if (p.j > 0) step_y_[flat({p.i, p.j - 1})] = Dense(field_, d, dims_[flat({p.i, p.j - 1})]);
}

void ExplicitModule::set_step_x(Index p, Dense m) { step_x_.at(flat(p)) = std::move(m); }
void ExplicitModule::set_step_y(Index p, Dense m) { step_y_.at(flat(p)) = std::move(m); }

void ExplicitModule::validate() const {
  for (std::size_t j = 0; j < ny_; ++j)
    for (std::size_t i = 0; i < nx_; ++i) {
      Index p{i, j};
      const auto& sx = step_x(p);
      const auto& sy = step_y(p);
      std::size_t tx = i + 1 < nx_ ? dim({i + 1, j}) : 0;
      std::size_t ty = j + 1 < ny_ ? dim({i, j + 1}) : 0;
      if (sx.cols() != dim(p) || sx.rows() != tx || sy.cols() != dim(p) || sy.rows() != ty)
        throw ContractError("transition matrix of wrong shape at " + describe(p));
      if (i + 1 < nx_ && j + 1 < ny_) {
        auto a = step_y({i + 1, j}) * sx;
        auto b = step_x({i, j + 1}) * sy;
        if (!(a == b)) throw ContractError("square at " + describe(p) + " does not commute");
      }
    }
}

Dense ExplicitModule::map(Index p, Index q) const {
  if (!index_leq(p, q)) throw ContractError("map requested between incomparable points");
  Dense m = Dense::identity(field_, dim(p));
  for (std::size_t i = p.i; i < q.i; ++i) m = step_x({i, p.j}) * m;
  for (std::size_t j = p.j; j < q.j; ++j) m = step_y({q.i, j}) * m;
  return m;
}

ExplicitModule ExplicitModule::operator+(const ExplicitModule& o) const {
  if (!(grid_ == o.grid_) || !(field_ == o.field_)) throw ContractError("direct sum of modules on different grids");
  ExplicitModule out(grid_, field_);
  auto block = [&](const Dense& a, const Dense& b) {
    Dense m(field_, a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return m;
  };
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    out.dims_[k] = dims_[k] + o.dims_[k];
    out.step_x_[k] = block(step_x_[k], o.step_x_[k]);
    out.step_y_[k] = block(step_y_[k], o.step_y_[k]);
  }
  return out;
}

namespace {

// Quotient k^{rows <= z} / im(relations <= z): a projection Q with kernel im A and a
// section S with Q S = I.
struct Quotient {
  std::vector<std::size_t> rows;  // generator indices present at z
  Dense q;                        // d x |rows|
  Dense s;                        // |rows| x d
};

Quotient quotient_at(const GradedMatrix& p, const Grade& z) {
  const Field& f = p.field();
  Quotient out;
  std::vector<std::size_t> row_pos(p.num_rows(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < p.num_rows(); ++i)
    if (grade_leq(p.row_grade(i), z)) {
      row_pos[i] = out.rows.size();
      out.rows.push_back(i);
    }
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < p.num_cols(); ++j)
    if (grade_leq(p.col_grade(j), z)) cols.push_back(j);
  Dense a(f, out.rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& e : p.column(cols[c]).entries()) a.at(row_pos.at(e.row), c) = e.coeff;
  out.q = nullspace(a.transpose()).transpose();
  const std::size_t d = out.q.rows();
  out.s = Dense(f, out.rows.size(), d);
  for (std::size_t k = 0; k < d; ++k) {
    Vec unit(d, 0);
    unit[k] = 1;
    auto x = solve(out.q, unit);
    if (!x) throw ContractError("quotient projection is not surjective");
    out.s.set_column(k, *x);
  }
  return out;
}

Dense transition(const Quotient& from, const Quotient& to, const Field& f) {
  // inclusion of generator coordinates
  Dense inc(f, to.rows.size(), from.rows.size());
  for (std::size_t a = 0; a < from.rows.size(); ++a) {
    auto it = std::lower_bound(to.rows.begin(), to.rows.end(), from.rows[a]);
    inc.at(static_cast<std::size_t>(it - to.rows.begin()), a) = 1;
  }
  return to.q * (inc * from.s);
}

}  // namespace

ExplicitModule module_from_presentation(const GradedMatrix& presentation, const inv::GradeGrid& grid) {
  ExplicitModule m(grid, presentation.field());
  const std::size_t nx = grid.nx(), ny = grid.ny();
  std::vector<Quotient> qs;
  qs.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) qs.push_back(quotient_at(presentation, grid.effective(i, j)));
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) m.set_dim({i, j}, qs[j * nx + i].q.rows());
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const auto& here = qs[j * nx + i];
      if (i + 1 < nx) m.set_step_x({i, j}, transition(here, qs[j * nx + i + 1], m.field()));
      if (j + 1 < ny) m.set_step_y({i, j}, transition(here, qs[(j + 1) * nx + i], m.field()));
    }
  m.validate();
  return m;
}

ExplicitModule interval_module(const inv::GradeGrid& grid, Field field, const std::vector<Index>& support) {
  ExplicitModule m(grid, field);
  if (support.empty()) return m;
  require_interval(support, m.nx(), m.ny());
  std::set<Index> in(support.begin(), support.end());
  for (auto p : in) m.set_dim(p, 1);
  for (auto p : in) {
    if (in.count({p.i + 1, p.j})) {
      Dense one(field, 1, 1);
      one.at(0, 0) = 1;
      m.set_step_x(p, one);
    }
    if (in.count({p.i, p.j + 1})) {
      Dense one(field, 1, 1);
      one.at(0, 0) = 1;
      m.set_step_y(p, one);
    }
  }
  m.validate();
  return m;
}

ExplicitModule rectangle_module(const inv::GradeGrid& grid, Field field, Index lo, Index hi) {
  if (!index_leq(lo, hi)) throw ContractError("rectangle corners are not ordered");
  std::vector<Index> support;
  for (std::size_t j = lo.j; j <= hi.j; ++j)
    for (std::size_t i = lo.i; i <= hi.i; ++i) support.push_back({i, j});
  return interval_module(grid, field, support);
}

std::size_t rank_between(const ExplicitModule& m, Index p, Index q) {
  if (!index_leq(p, q)) throw ContractError("rank requested between incomparable grades");
  return rank(m.map(p, q));
}

void require_interval(const std::vector<Index>& points, std::size_t nx, std::size_t ny) {
  if (points.empty()) throw ContractError("empty set is not an interval");
  std::set<Index> in(points.begin(), points.end());
  for (auto p : in)
    if (p.i >= nx || p.j >= ny) throw ContractError("interval point outside the grid");
  // convexity: p <= q <= r with p, r inside forces q inside
  for (auto p : in)
    for (auto r : in) {
      if (!index_leq(p, r)) continue;
      for (std::size_t j = p.j; j <= r.j; ++j)
        for (std::size_t i = p.i; i <= r.i; ++i)
          if (!in.count({i, j})) throw ContractError("subset is not convex");
    }
  std::set<Index> seen{*in.begin()};
  std::vector<Index> stack{*in.begin()};
  while (!stack.empty()) {
    auto p = stack.back();
    stack.pop_back();
    std::vector<Index> nb{{p.i + 1, p.j}, {p.i, p.j + 1}};
    if (p.i > 0) nb.push_back({p.i - 1, p.j});
    if (p.j > 0) nb.push_back({p.i, p.j - 1});
    for (auto q : nb)
      if (in.count(q) && seen.insert(q).second) stack.push_back(q);
  }
  if (seen.size() != in.size()) throw ContractError("subset is not connected");
}

std::size_t generalized_rank(const ExplicitModule& m, const std::vector<Index>& interval) {
  require_interval(interval, m.nx(), m.ny());
  const Field& f = m.field();
  std::vector<Index> pts(interval.begin(), interval.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::size_t> offset{0};
  for (auto p : pts) offset.push_back(offset.back() + m.dim(p));
  const std::size_t total = offset.back();
  auto position = [&](Index p) -> std::size_t {
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    return (it != pts.end() && *it == p) ? static_cast<std::size_t>(it - pts.begin()) : pts.size();
  };

  struct Edge {
    std::size_t from, to;
    const Dense* map;
  };
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    auto p = pts[a];
    auto bx = position({p.i + 1, p.j});
    if (bx < pts.size()) edges.push_back({a, bx, &m.step_x(p)});
    auto by = position({p.i, p.j + 1});
    if (by < pts.size()) edges.push_back({a, by, &m.step_y(p)});
  }

  // lim: kernel of (v_p) -> (step v_from - v_to) over all edges
  std::size_t diff_rows = 0;
  for (const auto& e : edges) diff_rows += m.dim(pts[e.to]);
  Dense diff(f, diff_rows, total);
  std::size_t r0 = 0;
  for (const auto& e : edges) {
    for (std::size_t r = 0; r < e.map->rows(); ++r) {
      for (std::size_t c = 0; c < e.map->cols(); ++c) diff.at(r0 + r, offset[e.from] + c) = e.map->at(r, c);
      diff.at(r0 + r, offset[e.to] + r) = f.sub(diff.at(r0 + r, offset[e.to] + r), 1);
    }
    r0 += e.map->rows();
  }
  Dense lim = nullspace(diff);

  // colim: cokernel of the relations v_from - step v_from, pasted over all edges
  std::size_t rel_cols = 0;
  for (const auto& e : edges) rel_cols += m.dim(pts[e.from]);
  Dense rel(f, total, rel_cols);
  std::size_t c0 = 0;
  for (const auto& e : edges) {
    for (std::size_t c = 0; c < e.map->cols(); ++c) {
      rel.at(offset[e.from] + c, c0 + c) = 1;
      for (std::size_t r = 0; r < e.map->rows(); ++r)
        rel.at(offset[e.to] + r, c0 + c) = f.sub(rel.at(offset[e.to] + r, c0 + c), e.map->at(r, c));
    }
    c0 += e.map->cols();
  }

  // lim -> colim through the component at the first point
  Dense image(f, total, lim.cols());
  for (std::size_t k = 0; k < lim.cols(); ++k)
    for (std::size_t r = 0; r < m.dim(pts[0]); ++r) image.at(offset[0] + r, k) = lim.at(offset[0] + r, k);
  return rank(rel.hcat(image)) - rank(rel);
}

}  // namespace mph::oracle
