#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mph/oracle/explicit_module.hpp"

namespace mph::oracle {

/// A square a = (x,y), d = (x',y') with b = (x,y'), c = (x',y), and the condition that
/// fails on it.
struct SquareFailure {
  Index a, d;
  std::string condition;
};

std::optional<SquareFailure> middle_exactness_failure(const ExplicitModule& m);
std::optional<SquareFailure> weak_exactness_failure(const ExplicitModule& m);
inline bool is_middle_exact(const ExplicitModule& m) { return !middle_exactness_failure(m); }
inline bool is_weakly_exact(const ExplicitModule& m) { return !weak_exactness_failure(m); }

/// Closed index rectangle [lo, hi] with a signed multiplicity.
struct IndexRectangle {
  Index lo, hi;
  long multiplicity = 0;

  friend bool operator==(const IndexRectangle&, const IndexRectangle&) = default;
  friend auto operator<=>(const IndexRectangle&, const IndexRectangle&) = default;
};

/// Rank of M_s -> M_t for every grid pair s <= t; entry [flat(s) * N + flat(t)].
class RankTable {
 public:
  explicit RankTable(const ExplicitModule& m);
  std::size_t operator()(Index s, Index t) const { return ranks_[flat(s) * n_ + flat(t)]; }
  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }

 private:
  std::size_t flat(Index p) const { return p.j * nx_ + p.i; }
  std::size_t nx_, ny_, n_;
  std::vector<std::size_t> ranks_;
};

/// Möbius inversion of the rank table by direct recursion: alpha[s,t] is rank(s,t) minus
/// alpha over all strictly larger rectangles containing [s,t]. Nonzero entries, sorted.
std::vector<IndexRectangle> mobius_inversion(const RankTable& ranks);

struct RectangleDecomposition {
  std::vector<IndexRectangle> rectangles;  // multiplicities > 0
  std::optional<SquareFailure> refusal;

  bool decomposed() const noexcept { return !refusal; }
};

/// Rectangle summands of a weakly exact module, verified by rebuilding the direct sum;
/// otherwise a refusal naming a failing square.
RectangleDecomposition rectangle_decompose(const ExplicitModule& m);

}  // namespace mph::oracle
