#include <doctest.h>

#include <random>

#include "examples.hpp"
#include "mph/core/errors.hpp"
#include "mph/oracle/exactness.hpp"
#include "mph/oracle/explicit_module.hpp"
#include "mph/oracle/interleaving.hpp"

using namespace mph;
using namespace mph::oracle;
using inv::GradeGrid;

TEST_CASE("dense algebra") {
  Field f(3);
  Dense a(f, 2, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 2) = 1;
  CHECK(rank(a) == 2);
  auto ns = nullspace(a);
  CHECK(ns.cols() == 1);
  CHECK(rank(a * ns) == 0);
  auto x = solve(a, {1, 2});
  REQUIRE(x);
  CHECK(a.apply(*x) == Vec{1, 2});
  Dense z(f, 2, 1);
  CHECK_FALSE(solve(z, {1, 0}));
}

TEST_CASE("module of a free generator") {
  Field f(2);
  GradedMatrix free(f, {{0, 0}}, {}, {});
  auto m = module_from_presentation(free, GradeGrid::integer(3, 3));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) CHECK(m.dim({i, j}) == 1);
  CHECK(rank_between(m, {0, 0}, {2, 2}) == 1);
}

TEST_CASE("module of the two-generator resolution example") {
  auto m = module_from_presentation(mph::testing::two_generator_relations(), GradeGrid::integer(4, 4));
  const std::size_t expected[4][4] = {{2, 2, 1, 0}, {2, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}};
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t x = 0; x < 4; ++x) CHECK(m.dim({x, y}) == expected[y][x]);
}

TEST_CASE("module without a good barcode") {
  for (Field f : {Field(2), Field(3)}) {
    auto m = module_from_presentation(mph::testing::no_good_barcode(f), GradeGrid::integer(3, 3));
    CHECK(m.dim({1, 1}) == 2);
    CHECK(m.dim({0, 0}) == 0);
    CHECK(m.dim({2, 2}) == 0);
    CHECK(rank_between(m, {0, 1}, {2, 1}) == 1);
    CHECK(rank_between(m, {0, 1}, {1, 2}) == 1);
    CHECK(rank_between(m, {1, 0}, {2, 1}) == 1);
    CHECK(rank_between(m, {1, 0}, {1, 2}) == 0);
    CHECK(rank_between(m, {1, 1}, {2, 2}) == 0);
    CHECK_THROWS_AS(rank_between(m, {0, 1}, {1, 0}), ContractError);
    CHECK(generalized_rank(m, {{1, 1}}) == 2);
    std::vector<Index> all;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i) all.push_back({i, j});
    CHECK(generalized_rank(m, all) == 0);
    CHECK_FALSE(is_middle_exact(m));
    auto d = rectangle_decompose(m);
    CHECK_FALSE(d.decomposed());
    REQUIRE(d.refusal);
    CHECK_FALSE(d.refusal->condition.empty());
  }
}

TEST_CASE("generalized rank of interval modules") {
  auto grid = GradeGrid::integer(4, 4);
  std::vector<Index> staircase{{0, 1}, {1, 1}, {1, 0}, {2, 0}, {2, 1}};
  auto m = interval_module(grid, Field(2), staircase);
  CHECK(generalized_rank(m, staircase) == 1);
  CHECK(generalized_rank(m, {{1, 1}}) == 1);
  CHECK_THROWS_AS(generalized_rank(m, {{0, 0}, {1, 1}}), ContractError);
  CHECK_THROWS_AS(interval_module(grid, Field(2), {{0, 0}, {2, 2}}), ContractError);
}

TEST_CASE("generalized rank over a rectangle equals the rank between its corners") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Field f(trial % 2 ? 3 : 2);
    auto p = mph::testing::random_presentation(rng, f, 4, 5, 4);
    auto m = module_from_presentation(p, GradeGrid::integer(4, 4));
    std::uniform_int_distribution<std::size_t> u(0, 3);
    Index s{u(rng), u(rng)}, t{u(rng), u(rng)};
    if (!index_leq(s, t)) std::swap(s, t);
    if (!index_leq(s, t)) continue;
    std::vector<Index> rect;
    for (std::size_t j = s.j; j <= t.j; ++j)
      for (std::size_t i = s.i; i <= t.i; ++i) rect.push_back({i, j});
    CHECK(generalized_rank(m, rect) == rank_between(m, s, t));
  }
}

TEST_CASE("exactness of rectangle sums and the zero module") {
  auto grid = GradeGrid::integer(3, 3);
  ExplicitModule zero(grid, Field(2));
  CHECK(is_middle_exact(zero));
  CHECK(is_weakly_exact(zero));
  auto sum = rectangle_module(grid, Field(2), {0, 0}, {1, 1}) + rectangle_module(grid, Field(2), {1, 0}, {2, 2});
  sum.validate();
  CHECK(is_weakly_exact(sum));
  // a rectangle touching the grid minimum is a downset, hence a block
  CHECK(is_middle_exact(rectangle_module(grid, Field(2), {0, 0}, {1, 1})));
  // an interior point is not: the square (0,1) <= (1,1), (0,2) <= (1,2) has kernel k and image 0
  auto point = rectangle_module(grid, Field(2), {1, 1}, {1, 1});
  CHECK_FALSE(is_middle_exact(point));
  CHECK(is_weakly_exact(point));
  // unbounded-above rectangles are blocks
  CHECK(is_middle_exact(rectangle_module(grid, Field(2), {1, 1}, {2, 2})));
  auto d = rectangle_decompose(sum);
  REQUIRE(d.decomposed());
  CHECK(d.rectangles == std::vector<IndexRectangle>{{{0, 0}, {1, 1}, 1}, {{1, 0}, {2, 2}, 1}});
}

TEST_CASE("rectangle decomposition recovers random rectangle sums") {
  std::mt19937_64 rng(31);
  auto grid = GradeGrid::integer(5, 5);
  std::uniform_int_distribution<std::size_t> u(0, 4), count(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    ExplicitModule m(grid, Field(2));
    std::vector<IndexRectangle> expected;
    for (std::size_t k = count(rng); k > 0; --k) {
      Index lo{u(rng), u(rng)}, hi{u(rng), u(rng)};
      if (lo.i > hi.i) std::swap(lo.i, hi.i);
      if (lo.j > hi.j) std::swap(lo.j, hi.j);
      m = m + rectangle_module(grid, Field(2), lo, hi);
      auto it = std::find_if(expected.begin(), expected.end(),
                             [&](const IndexRectangle& r) { return r.lo == lo && r.hi == hi; });
      if (it == expected.end())
        expected.push_back({lo, hi, 1});
      else
        ++it->multiplicity;
    }
    std::sort(expected.begin(), expected.end());
    auto d = rectangle_decompose(m);
    REQUIRE(d.decomposed());
    CHECK(d.rectangles == expected);
  }
}

TEST_CASE("one-parameter module decomposes into its barcode") {
  Field f(2);
  // generators at 0 and 1, relations at 2 (kills the younger) and 3 (kills the older)
  GradedMatrix p(f, {{0, 0}, {1, 0}}, {{2, 0}, {3, 0}},
                 {mph::testing::col({{1, 1}}, f), mph::testing::col({{0, 1}}, f)});
  auto m = module_from_presentation(p, GradeGrid::integer(4, 1));
  auto d = rectangle_decompose(m);
  REQUIRE(d.decomposed());
  CHECK(d.rectangles == std::vector<IndexRectangle>{{{0, 0}, {2, 0}, 1}, {{1, 0}, {1, 0}, 1}});
}

TEST_CASE("interleaving search") {
  std::vector<double> xs;
  for (int k = 0; k <= 28; ++k) xs.push_back(k * 0.5);
  GradeGrid grid(xs, xs);
  Field f(2);
  std::vector<double> eps;
  for (int k = 0; k <= 8; ++k) eps.push_back(k * 0.5);
  auto rect = [&](Grade lo, Grade hi) { return mph::testing::half_open_rectangle(grid, f, lo, hi); };
  ExplicitModule zero(grid, f);

  auto a = rect({0, 0}, {2, 2});
  CHECK(interleaving_search(a, a, eps) == 0.0);
  CHECK(interleaving_search(a, zero, eps) == 1.0);
  CHECK(interleaving_search(rect({1, 1}, {3, 5}), zero, eps) == 1.0);
  CHECK(interleaving_search(rect({0, 0}, {10, 10}), rect({1, 1}, {10, 10}), eps) == 1.0);
  CHECK(interleaving_search(rect({0, 0}, {4, 4}), rect({0, 0}, {4, 3}), eps) == 1.0);
  CHECK_FALSE(interleaved(a, zero, 1));
  auto not_interval = a + a;
  CHECK_THROWS_AS(interleaving_search(not_interval, zero, eps), ContractError);
}
