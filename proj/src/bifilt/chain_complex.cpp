#include "mph/bifilt/chain_complex.hpp"

#include <numeric>

#include "mph/core/errors.hpp"

namespace mph::bifilt {
namespace {

// Flat indexing of the generators of S_k (one per birth) and J_k (one per consecutive
// pair of births) for every dimension k.
class Generators {
 public:
  Generators(const Bifiltration& b, int top) : b_(b) {
    for (int k = 0; k <= top; ++k) {
      std::vector<std::size_t> so{0}, jo{0};
      for (const auto& s : b.simplices(k)) {
        so.push_back(so.back() + s.births.size());
        jo.push_back(jo.back() + s.births.size() - 1);
      }
      s_offset_.push_back(std::move(so));
      j_offset_.push_back(std::move(jo));
    }
  }

  std::size_t s_count(int k) const { return k < 0 ? 0 : s_offset_[k].back(); }
  std::size_t j_count(int k) const { return k < 0 ? 0 : j_offset_[k].back(); }
  std::size_t s_index(int k, std::size_t simplex, std::size_t copy) const { return s_offset_[k][simplex] + copy; }
  std::size_t j_index(int k, std::size_t simplex, std::size_t pair) const { return j_offset_[k][simplex] + pair; }

  std::vector<Grade> s_grades(int k) const {
    std::vector<Grade> g;
    if (k < 0) return g;
    for (const auto& s : b_.simplices(k)) g.insert(g.end(), s.births.begin(), s.births.end());
    return g;
  }
  std::vector<Grade> j_grades(int k) const {
    std::vector<Grade> g;
    if (k < 0) return g;
    for (const auto& s : b_.simplices(k))
      for (std::size_t l = 0; l + 1 < s.births.size(); ++l) g.push_back(join(s.births[l], s.births[l + 1]));
    return g;
  }

 private:
  const Bifiltration& b_;
  std::vector<std::vector<std::size_t>> s_offset_, j_offset_;
};

using Vec = std::vector<Entry>;

class Builder {
 public:
  Builder(const Bifiltration& b, int top, Field field) : b_(b), gens_(b, top), field_(field) {}

  // Boundary of the copy of sigma (dimension k) born at births[copy], as a vector in S_{k-1}.
  Vec lifted_boundary(int k, std::size_t simplex, std::size_t copy) const {
    Vec out;
    if (k == 0) return out;
    const auto& s = b_.simplices(k)[simplex];
    const Grade& birth = s.births[copy];
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      Simplex facet = s.vertices;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
      auto fi = *b_.find(facet);
      const auto& fb = b_.simplices(k - 1)[fi].births;
      std::size_t l = 0;
      while (!grade_leq(fb[l], birth)) ++l;
      Field::Elem sign = drop % 2 == 0 ? 1 : field_.neg(1);
      out.push_back({static_cast<std::uint32_t>(gens_.s_index(k - 1, fi, l)), sign});
    }
    return out;
  }

  // Image of a vector in S_{k-1} under the lifted boundary, in S_{k-2}.
  Vec apply_lift(int k, const Vec& v) const {
    Vec out;
    if (k == 0) return out;
    const auto& simplices = b_.simplices(k);
    for (const auto& e : v) {
      // locate (simplex, copy) of flat index e.row
      std::size_t lo = 0, hi = simplices.size();
      while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (gens_.s_index(k, mid, 0) <= e.row) lo = mid; else hi = mid;
      }
      auto copy = e.row - gens_.s_index(k, lo, 0);
      for (const auto& t : lifted_boundary(k, lo, copy)) out.push_back({t.row, field_.mul(e.coeff, t.coeff)});
    }
    auto col = SparseColumn::from_entries(std::move(out), field_);
    return {col.entries().begin(), col.entries().end()};
  }

  // Preimage under S_k <- J_k (J_{tau,l} -> tau^l - tau^{l+1}) of a vector whose copies
  // sum to zero for every simplex.
  Vec unglue(int k, const Vec& v) const {
    Vec out;
    if (k < 0) return out;
    const auto& simplices = b_.simplices(k);
    std::size_t pos = 0;
    auto col = SparseColumn::from_entries(v, field_);
    auto entries = col.entries();
    while (pos < entries.size()) {
      std::size_t lo = 0, hi = simplices.size();
      while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (gens_.s_index(k, mid, 0) <= entries[pos].row) lo = mid; else hi = mid;
      }
      const std::size_t base = gens_.s_index(k, lo, 0);
      const std::size_t copies = simplices[lo].births.size();
      std::vector<Field::Elem> c(copies, 0);
      while (pos < entries.size() && entries[pos].row < base + copies) {
        c[entries[pos].row - base] = entries[pos].coeff;
        ++pos;
      }
      Field::Elem prefix = 0;
      for (std::size_t l = 0; l < copies; ++l) {
        prefix = field_.add(prefix, c[l]);
        if (l + 1 < copies && prefix != 0)
          out.push_back({static_cast<std::uint32_t>(gens_.j_index(k, lo, l)), prefix});
      }
      if (prefix != 0) throw ContractError("boundary does not vanish on a simplex: face closure is broken");
    }
    return out;
  }

  // d_k : F_k = S_k + J_{k-1} -> F_{k-1} = S_{k-1} + J_{k-2}, unsorted bases.
  GradedMatrix differential(int k) const {
    const std::size_t s_rows = gens_.s_count(k - 1);
    auto row_grades = gens_.s_grades(k - 1);
    auto jg = gens_.j_grades(k - 2);
    row_grades.insert(row_grades.end(), jg.begin(), jg.end());
    auto col_grades = gens_.s_grades(k);
    auto jc = gens_.j_grades(k - 1);
    col_grades.insert(col_grades.end(), jc.begin(), jc.end());

    auto shift = [&](Vec v) {
      for (auto& e : v) e.row = static_cast<std::uint32_t>(e.row + s_rows);
      return v;
    };
    auto negate = [&](Vec v) {
      for (auto& e : v) e.coeff = field_.neg(e.coeff);
      return v;
    };

    std::vector<SparseColumn> cols;
    const auto& simplices = b_.simplices(k);
    for (std::size_t s = 0; s < simplices.size(); ++s)
      for (std::size_t c = 0; c < simplices[s].births.size(); ++c) {
        auto d = lifted_boundary(k, s, c);
        auto h = shift(negate(unglue(k - 2, apply_lift(k - 1, d))));
        d.insert(d.end(), h.begin(), h.end());
        cols.push_back(SparseColumn::from_entries(std::move(d), field_));
      }
    const auto& lower = b_.simplices(k - 1);
    for (std::size_t t = 0; t < lower.size(); ++t)
      for (std::size_t l = 0; l + 1 < lower[t].births.size(); ++l) {
        Vec glue{{static_cast<std::uint32_t>(gens_.s_index(k - 1, t, l)), 1},
                 {static_cast<std::uint32_t>(gens_.s_index(k - 1, t, l + 1)), field_.neg(1)}};
        auto boundary_diff = apply_lift(k - 1, glue);
        auto dj = shift(negate(unglue(k - 2, boundary_diff)));
        glue.insert(glue.end(), dj.begin(), dj.end());
        cols.push_back(SparseColumn::from_entries(std::move(glue), field_));
      }
    return GradedMatrix(field_, std::move(row_grades), std::move(col_grades), std::move(cols));
  }

 private:
  const Bifiltration& b_;
  Generators gens_;
  Field field_;
};

}  // namespace

std::vector<Grade> FreeChainComplex::basis(int k) const {
  if (k < 0 || k > top() || boundary.empty()) return {};
  auto g = k == 0 ? boundary[0].row_grades() : boundary[k - 1].col_grades();
  return {g.begin(), g.end()};
}

FreeChainComplex free_chain_complex(const Bifiltration& b, int top, Field field) {
  if (top < 1) throw ContractError("a chain complex needs at least one boundary map");
  Builder builder(b, top, field);
  FreeChainComplex out{field, b.axes(), {}};
  for (int k = 1; k <= top; ++k) out.boundary.push_back(builder.differential(k).sorted_colex());
  return out;
}

ShortComplex short_complex(const FreeChainComplex& c, int i) {
  if (i < 0 || i >= c.top()) throw ContractError("homology degree " + std::to_string(i) + " not covered by complex");
  const auto& f = c.boundary[static_cast<std::size_t>(i)];
  if (i == 0) return {f, GradedMatrix::zero(c.field, {}, c.basis(0))};
  return {f, c.boundary[static_cast<std::size_t>(i - 1)]};
}

ShortComplex short_complex(const Bifiltration& b, int i, Field field) {
  return short_complex(free_chain_complex(b, i + 1, field), i);
}

}  // namespace mph::bifilt
