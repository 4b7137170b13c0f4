#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "mph/bifilt/builders.hpp"
#include "mph/bifilt/chain_complex.hpp"
#include "mph/bifilt/points.hpp"
#include "mph/core/errors.hpp"
#include "mph/oracle/simplicial.hpp"
#include "random_bifiltration.hpp"

using namespace mph;
using namespace mph::bifilt;

namespace {

PointCloud parse(const std::string& text, bool function = false) {
  std::istringstream in(text);
  return load_points(in, function);
}

PointCloud octagon() {
  std::ifstream in(MPH_FIXTURE_DIR "/octagon_cluster.csv");
  return load_points(in, false);
}

DistanceMatrix line_distances(std::vector<double> xs) {
  PointCloud c;
  for (double x : xs) c.points.push_back({x});
  return pairwise_distances(c);
}

}  // namespace

TEST_CASE("point loading") {
  auto c = parse("0,0\n1,0\n0,1\n");
  CHECK(c.size() == 3);
  CHECK(c.dimension() == 2);
  CHECK_FALSE(c.values.has_value());

  auto f = parse("# header\n0,0,5.5\n1,0,2.0\n", true);
  CHECK(f.size() == 2);
  CHECK(f.dimension() == 2);
  CHECK(*f.values == std::vector<double>{5.5, 2.0});

  CHECK(octagon().size() == 10);

  try {
    parse("0,0\n1,0,3\n");
    FAIL("ragged input accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("0,a\n"), ParseError);
}

TEST_CASE("distance file loading") {
  std::istringstream in("3\n1\n3 2\n");
  auto d = load_distances(in);
  CHECK(d(0, 1) == 1);
  CHECK(d(2, 0) == 3);
  CHECK(d(1, 2) == 2);
  std::istringstream bad("3\n1\n3\n");
  CHECK_THROWS_AS(load_distances(bad), ParseError);
}

TEST_CASE("pairwise distances") {
  PointCloud square;
  square.points = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto d = pairwise_distances(square);
  CHECK(d(0, 3) == doctest::Approx(std::sqrt(2.0)));
  CHECK(d(0, 1) == 1);
  CHECK(d(3, 0) == d(0, 3));

  PointCloud single;
  single.points = {{4, 2}};
  CHECK(pairwise_distances(single).size() == 1);

  auto l = line_distances({0, 1, 3});
  CHECK(l(0, 1) == 1);
  CHECK(l(0, 2) == 3);
  CHECK(l(1, 2) == 2);
}

TEST_CASE("rips complex") {
  auto d = line_distances({0, 1, 3, 7});
  CHECK(rips_complex(d, 0.5, 3).size() == 4);
  auto full = rips_complex(d, 100, 3);
  CHECK(full.size() == 15);
  std::set<Simplex> unique(full.begin(), full.end());
  CHECK(unique.size() == 15);
}

TEST_CASE("degree-Rips on two points") {
  auto d = line_distances({0, 1});
  auto b = degree_rips(d, 1);
  REQUIRE(b.simplices(0).size() == 2);
  REQUIRE(b.simplices(1).size() == 1);
  CHECK(b.simplices(0)[0].births == std::vector<Grade>{{-2, 1}, {-1, 0}});
  CHECK(b.simplices(1)[0].births == std::vector<Grade>{{-2, 1}});
  // degree threshold d is stored as x = -d
  auto at = [&](double deg, double r) { return b.complex_at({-deg, r}); };
  CHECK(at(2, 1)[1].size() == 1);
  CHECK(at(2, 0.5)[1].empty());
  CHECK(at(3, 1)[0].empty());
  CHECK(at(3, 50)[0].empty());
  CHECK(b.axes().x_name == "degree");
  CHECK(b.axes().x_reversed);
}

TEST_CASE("degree-Rips at degree one is the Rips filtration") {
  auto d = pairwise_distances(octagon());
  auto b = degree_rips(d, 2);
  std::vector<double> radii{0};
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) radii.push_back(d(i, j));
  for (double r : radii) {
    auto present = b.complex_at({-1, r});
    std::set<Simplex> from_bifiltration;
    for (int k = 0; k <= 2; ++k)
      for (auto idx : present[k]) from_bifiltration.insert(b.simplices(k)[idx].vertices);
    auto rips = rips_complex(d, r, 2);
    CHECK(from_bifiltration == std::set<Simplex>(rips.begin(), rips.end()));
  }
}

TEST_CASE("degree-Rips keeps only the dense cluster at degree four") {
  auto b = degree_rips(pairwise_distances(octagon()), 2);
  auto present = b.complex_at({-4, 0.8});
  std::set<Simplex> vertices;
  for (auto i : present[0]) vertices.insert(b.simplices(0)[i].vertices);
  CHECK(vertices == std::set<Simplex>{{0}, {4}, {8}, {9}});
  CHECK(b.complex_at({-4, 0.7})[0] == std::vector<std::size_t>{8, 9});
  CHECK(b.complex_at({-4, 0.5})[0].empty());
}

TEST_CASE("grid coarsening") {
  auto b = degree_rips(pairwise_distances(octagon()), 2);
  CHECK_THROWS_AS(degree_rips(pairwise_distances(octagon()), 2, GridSpec{0, 4}), ContractError);
  auto c = degree_rips(pairwise_distances(octagon()), 2, GridSpec{4, 5});
  CHECK(c.xs().size() <= 4);
  CHECK(c.ys().size() <= 5);
  CHECK(c.size() == b.size());
  // coarsening only delays births
  for (int k = 0; k <= 2; ++k)
    for (std::size_t i = 0; i < b.simplices(k).size(); ++i)
      for (const auto& g : c.simplices(k)[i].births) CHECK(born_by(b.simplices(k)[i].births, g));
}

TEST_CASE("function-Rips") {
  auto d = line_distances({0, 3});
  auto sup = function_rips(d, {5, 7}, Level::super, 1);
  CHECK(sup.simplices(0)[0].births == std::vector<Grade>{{-5, 0}});
  auto d2 = line_distances({0, 3});
  auto e = function_rips(d2, {2, 7}, Level::super, 1);
  CHECK(e.simplices(1)[0].births == std::vector<Grade>{{-2, 3}});
  auto sub = function_rips(d2, {2, 7}, Level::sub, 1);
  CHECK(sub.simplices(1)[0].births == std::vector<Grade>{{7, 3}});
  CHECK(e.is_one_critical());
  CHECK_THROWS_AS(function_rips(d2, {1}, Level::super, 1), ContractError);

  auto oct = pairwise_distances(octagon());
  auto constant = function_rips(oct, std::vector<double>(10, 1.5), Level::super, 2);
  for (double r : {0.5, 0.8, 1.5}) {
    auto present = constant.complex_at({-1.5, r});
    std::size_t n = 0;
    for (auto& p : present) n += p.size();
    CHECK(n == rips_complex(oct, r, 2).size());
  }
}

TEST_CASE("bifiltration validation") {
  CHECK_THROWS_AS(Bifiltration({{{0, 1}, {{0, 0}}}}, {}), ContractError);
  CHECK_THROWS_AS(Bifiltration({{{0}, {{1, 1}}}, {{1}, {{0, 0}}}, {{0, 1}, {{0, 0}}}}, {}), ContractError);
  CHECK_THROWS_AS(Bifiltration({{{0}, {{0, 0}, {1, 1}}}}, {}), ContractError);
}

namespace {

Bifiltration one_critical(std::vector<std::pair<Simplex, Grade>> s) {
  std::vector<BifiltSimplex> out;
  for (auto& [v, g] : s) out.push_back({v, {g}});
  return Bifiltration(std::move(out), {});
}

}  // namespace

TEST_CASE("short complex: small 1-critical examples") {
  auto triangle = one_critical({{{0}, {0, 0}}, {{1}, {0, 0}}, {{2}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 2}, {0, 0}},
                                {{1, 2}, {0, 0}}, {{0, 1, 2}, {0, 0}}});
  auto sc = short_complex(triangle, 1);
  CHECK((sc.g.multiply(sc.f)).is_zero());
  CHECK(oracle::pointwise_homology(sc, {0, 0}) == 0);
  CHECK(oracle::pointwise_homology(sc, {3, 3}) == 0);

  auto square = one_critical({{{0}, {0, 0}}, {{1}, {0, 0}}, {{2}, {0, 0}}, {{3}, {0, 0}}, {{0, 1}, {0, 0}},
                              {{1, 2}, {0, 0}}, {{2, 3}, {0, 0}}, {{0, 3}, {0, 0}}});
  for (Field f : {Field(2), Field(3)}) {
    auto h1 = short_complex(square, 1, f);
    CHECK(oracle::pointwise_homology(h1, {0, 0}) == 1);
    CHECK(oracle::pointwise_homology(h1, {2, 5}) == 1);
    CHECK(oracle::pointwise_homology(h1, {-1, 0}) == 0);
  }
}

TEST_CASE("short complex: multicritical edge") {
  Bifiltration b({{{0}, {{0, 0}}}, {{1}, {{0, 0}}}, {{0, 1}, {{0, 2}, {2, 0}}}}, {});
  for (Field f : {Field(2), Field(5)}) {
    auto sc = short_complex(b, 0, f);
    CHECK(sc.f.num_cols() == 2);  // one copy per birth of the edge
    CHECK(oracle::pointwise_homology(sc, {0, 0}) == 2);
    CHECK(oracle::pointwise_homology(sc, {1, 1}) == 2);
    CHECK(oracle::pointwise_homology(sc, {0, 2}) == 1);
    CHECK(oracle::pointwise_homology(sc, {2, 0}) == 1);
    CHECK(oracle::pointwise_homology(sc, {3, 3}) == 1);
    auto h1 = short_complex(b, 1, f);
    CHECK(h1.f.num_cols() == 1);  // the generator gluing the two copies, born at their join
    CHECK(h1.f.col_grade(0) == Grade{2, 2});
    CHECK(h1.g.multiply(h1.f).is_zero());
    for (double x : {0, 1, 2, 3})
      for (double y : {0, 1, 2, 3}) CHECK(oracle::pointwise_homology(h1, {x, y}) == 0);
  }
}

TEST_CASE("short complex matches simplicial homology on random bifiltrations") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto b = mph::testing::random_bifiltration(rng, 3 + trial % 6, 5, 5);
    for (Field f : {Field(2), Field(3)}) {
      auto chain = free_chain_complex(b, 2, f);
      CHECK(chain.boundary[0].multiply(chain.boundary[1]).is_zero());
      for (int i = 0; i <= 1; ++i) {
        auto sc = short_complex(chain, i);
        for (double x : b.xs())
          for (double y : b.ys()) {
            Grade z{x, y};
            CHECK(oracle::pointwise_homology(sc, z) == oracle::simplicial_homology(b, z, i, f));
          }
      }
    }
  }
}

TEST_CASE("degree-Rips short complexes match simplicial homology") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 5; ++trial) {
    PointCloud c;
    for (int i = 0; i < 7; ++i) c.points.push_back({u(rng), u(rng)});
    auto b = degree_rips(pairwise_distances(c), 2, GridSpec{4, 6});
    auto chain = free_chain_complex(b, 2);
    for (int i = 0; i <= 1; ++i) {
      auto sc = short_complex(chain, i);
      for (double x : b.xs())
        for (double y : b.ys()) CHECK(oracle::pointwise_homology(sc, {x, y}) == oracle::simplicial_homology(b, {x, y}, i));
    }
  }
}
