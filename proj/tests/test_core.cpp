#include <doctest.h>

#include <random>

#include "mph/core/errors.hpp"
#include "mph/core/field.hpp"
#include "mph/core/grade.hpp"
#include "mph/core/graded_matrix.hpp"
#include "mph/core/reduction.hpp"
#include "support.hpp"

using namespace mph;
using mph::testing::col;

TEST_CASE("product order") {
  CHECK(grade_leq({0, 1}, {2, 1}));
  CHECK(grade_leq({1, 0}, {1, 2}));
  CHECK_FALSE(grade_leq({1, 2}, {1, 0}));
  CHECK_FALSE(grade_leq({0, 1}, {1, 0}));
  CHECK_FALSE(grade_leq({1, 0}, {0, 1}));
  CHECK_FALSE(comparable({0, 1}, {1, 0}));
}

TEST_CASE("colex order") {
  CHECK(colex_compare({3, 0}, {0, 2}) < 0);
  CHECK(colex_compare({0, 2}, {0, 3}) < 0);
  CHECK(colex_compare({1, 1}, {1, 1}) == 0);
  CHECK(colex_less({1, 1}, 0, {1, 1}, 1));
  CHECK_FALSE(colex_less({1, 1}, 1, {1, 1}, 0));
}

TEST_CASE("field arithmetic") {
  Field f(7);
  for (Field::Elem a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.to_signed(6) == -1);
  CHECK_THROWS_AS(Field(4), ContractError);
  CHECK_THROWS_AS(Field(65537), ContractError);
}

TEST_CASE("real formatting round-trips") {
  for (double v : {0.0, -0.0, 1.0, 0.1, -2.5, 0.7653668647301796, 1e-12}) {
    auto s = format_real(v);
    CHECK(parse_real(s) == v);
  }
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(negate_axis(0.0)) == "0");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK_THROWS_AS(parse_real("1.5x", 3), ParseError);
  CHECK_THROWS_AS(parse_real(""), ParseError);
}

TEST_CASE("sparse column arithmetic") {
  Field f(3);
  auto a = col({{0, 1}, {2, 2}}, f);
  auto b = col({{2, 1}, {4, 1}}, f);
  a.axpy(1, b, f);
  CHECK(a == col({{0, 1}, {4, 1}}, f));
  CHECK(a.pivot() == 4u);
  auto c = SparseColumn::from_entries({{3, 1}, {1, 2}, {3, 2}}, f);
  CHECK(c == col({{1, 2}}, f));
}

TEST_CASE("homogeneity is enforced") {
  Field f(2);
  CHECK_THROWS_AS(GradedMatrix(f, {{1, 1}}, {{0, 5}}, {col({{0, 1}}, f)}), ContractError);
  try {
    GradedMatrix(f, {{0, 0}, {2, 0}}, {{1, 1}}, {col({{0, 1}, {1, 1}}, f)});
    FAIL("expected rejection");
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("(1, 0)") != std::string::npos);
  }
}

TEST_CASE("reduce: trivial inputs") {
  Field f(2);
  auto z = GradedMatrix::zero(f, {{0, 0}, {1, 0}}, {{1, 1}, {2, 2}});
  auto r = reduce(z, true);
  CHECK(r.reduced == z);
  CHECK(*r.slave == GradedMatrix::identity(f, {{1, 1}, {2, 2}}));

  GradedMatrix one(f, {{0, 0}}, {{0, 0}}, {col({{0, 1}}, f)});
  CHECK(reduce(one, false).reduced == one);
}

TEST_CASE("reduce: two-generator relation matrix") {
  auto a1 = mph::testing::two_generator_relations();
  auto r = reduce(a1, true);
  for (std::size_t j = 0; j < a1.num_cols(); ++j) CHECK_FALSE(r.reduced.column(j).empty());
  CHECK(a1.multiply(*r.slave) == r.reduced);
  // kernel dimension at the global maximum grade
  CHECK(a1.num_cols() - oracle::rank(mph::testing::to_dense(a1)) == 3);
}

TEST_CASE("reduce: columns at equal grade") {
  Field f(2);
  GradedMatrix m(f, {{0, 0}}, {{1, 1}, {1, 1}, {2, 0}}, {col({{0, 1}}, f), col({{0, 1}}, f), col({{0, 1}}, f)});
  auto r = reduce(m, true);
  CHECK_FALSE(r.reduced.column(0).empty());
  CHECK(r.reduced.column(1).empty());
  // (2,0) precedes (1,1) in colex order but is not below it: nothing to reduce against
  CHECK_FALSE(r.reduced.column(2).empty());
}

TEST_CASE("reduce: determinism, homogeneity, master = input * slave, span preservation") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    Field f(trial % 2 ? 3 : 2);
    auto m = mph::testing::random_graded(rng, f, 6, 6, 4, 4, 0.5);
    auto r1 = reduce(m, true);
    auto r2 = reduce(m, true);
    CHECK(r1.reduced == r2.reduced);
    CHECK(*r1.slave == *r2.slave);
    r1.reduced.check_homogeneous();
    r1.slave->check_homogeneous();
    CHECK(m.multiply(*r1.slave) == r1.reduced);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        Grade z{double(x), double(y)};
        auto before = mph::testing::dense_at(m, z);
        auto after = mph::testing::dense_at(r1.reduced, z);
        auto both = before.hcat(after);
        CHECK(oracle::rank(before) == oracle::rank(after));
        CHECK(oracle::rank(both) == oracle::rank(before));
      }
  }
}

TEST_CASE("reduce: zero columns are exactly those in the span of earlier columns below them") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Field f(2);
    auto m = mph::testing::random_graded(rng, f, 5, 7, 3, 3, 0.4);
    auto r = reduce(m, false);
    auto order = m.colex_column_order();
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto j = order[k];
      std::vector<std::size_t> earlier;
      for (std::size_t l = 0; l < k; ++l)
        if (grade_leq(m.col_grade(order[l]), m.col_grade(j))) earlier.push_back(order[l]);
      auto dense = mph::testing::to_dense(m);
      auto base = dense.select_columns(earlier);
      auto with = base.hcat(dense.select_columns({j}));
      bool in_span = oracle::rank(with) == oracle::rank(base);
      CHECK(r.reduced.column(j).empty() == in_span);
    }
  }
}

TEST_CASE("sorted_colex and permutations") {
  auto a1 = mph::testing::two_generator_relations();
  auto s = a1.sorted_colex();
  CHECK(s.is_colex_sorted());
  CHECK(s.col_grade(0) == Grade{2, 0});
  CHECK(s.col_grade(4) == Grade{0, 3});
  CHECK_THROWS_AS(a1.permute_rows(std::vector<std::size_t>{0}), ContractError);
}
