#include "mph/oracle/dense.hpp"

#include <utility>

#include "mph/core/errors.hpp"

namespace mph::oracle {

Dense Dense::identity(Field field, std::size_t n) {
  Dense d(field, n, n);
  for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 1;
  return d;
}

Vec Dense::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Dense::set_column(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Dense Dense::transpose() const {
  Dense t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Dense Dense::operator*(const Dense& rhs) const {
  if (cols_ != rhs.rows_) throw ContractError("dense product shape mismatch");
  Dense out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      auto a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
    }
  return out;
}

Vec Dense::apply(const Vec& v) const {
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
  return out;
}

Dense Dense::hcat(const Dense& rhs) const {
  if (rows_ != rhs.rows_) throw ContractError("dense hcat shape mismatch");
  Dense out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
  }
  return out;
}

Dense Dense::vcat(const Dense& rhs) const {
  if (cols_ != rhs.cols_) throw ContractError("dense vcat shape mismatch");
  Dense out(field_, rows_ + rhs.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < rhs.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = rhs.at(i, j);
  return out;
}

Dense Dense::select_columns(const std::vector<std::size_t>& cols) const {
  Dense out(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(i, cols[j]);
  return out;
}

Dense Dense::select_rows(const std::vector<std::size_t>& rows) const {
  Dense out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(rows[i], j);
  return out;
}

Echelon row_reduce(Dense m) {
  const Field& f = m.field();
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    auto inv = f.inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      auto factor = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Dense& m) { return row_reduce(m).pivots.size(); }

Dense nullspace(const Dense& m) {
  const Field& f = m.field();
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Dense basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis.at(e.pivots[r], k) = f.neg(e.rref.at(r, free_cols[k]));
  }
  return basis;
}

std::optional<Vec> solve(const Dense& m, const Vec& b) {
  const Field& f = m.field();
  Dense aug(f, m.rows(), 1);
  aug.set_column(0, b);
  auto e = row_reduce(m.hcat(aug));
  Vec x(m.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rref.at(r, m.cols());
  }
  return x;
}

std::vector<std::size_t> independent_columns(const Dense& m) { return row_reduce(m).pivots; }

}  // namespace mph::oracle
