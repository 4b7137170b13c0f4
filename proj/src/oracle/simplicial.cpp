#include "mph/oracle/simplicial.hpp"

#include <map>

#include "mph/oracle/dense.hpp"

namespace mph::oracle {
namespace {

Dense boundary_at(const bifilt::Bifiltration& b, const std::vector<std::vector<std::size_t>>& present, int k,
                  Field field) {
  auto count = [&](int d) { return d >= 0 && d < static_cast<int>(present.size()) ? present[d].size() : 0; };
  Dense m(field, count(k - 1), count(k));
  if (k <= 0 || m.cols() == 0) return m;
  std::map<bifilt::Simplex, std::size_t> row;
  for (std::size_t r = 0; r < present[k - 1].size(); ++r) row[b.simplices(k - 1)[present[k - 1][r]].vertices] = r;
  for (std::size_t c = 0; c < present[k].size(); ++c) {
    const auto& v = b.simplices(k)[present[k][c]].vertices;
    for (std::size_t drop = 0; drop < v.size(); ++drop) {
      auto facet = v;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
      m.at(row.at(facet), c) = drop % 2 ? field.neg(1) : 1;
    }
  }
  return m;
}

Dense dense_at(const GradedMatrix& m, const Grade& z, bool restrict_rows) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.num_rows(); ++i)
    if (!restrict_rows || grade_leq(m.row_grade(i), z)) rows.push_back(i);
  for (std::size_t j = 0; j < m.num_cols(); ++j)
    if (grade_leq(m.col_grade(j), z)) cols.push_back(j);
  Dense d(m.field(), rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t c = 0; c < cols.size(); ++c) d.at(a, c) = m.at(rows[a], cols[c]);
  return d;
}

}  // namespace

std::size_t simplicial_homology(const bifilt::Bifiltration& b, const Grade& z, int i, Field field) {
  auto present = b.complex_at(z);
  if (i < 0 || i >= static_cast<int>(present.size())) return 0;
  auto di = boundary_at(b, present, i, field);
  auto dn = boundary_at(b, present, i + 1, field);
  return present[i].size() - rank(di) - rank(dn);
}

std::size_t pointwise_homology(const bifilt::ShortComplex& c, const Grade& z) {
  auto g = dense_at(c.g, z, false);
  auto f = dense_at(c.f, z, true);
  std::size_t y = 0;
  for (const auto& gr : c.f.row_grades()) y += grade_leq(gr, z);
  return y - rank(g) - rank(f);
}

}  // namespace mph::oracle
