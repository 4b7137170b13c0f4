#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mph/bifilt/builders.hpp"
#include "mph/cli/cli.hpp"
#include "mph/io/formats.hpp"
#include "mph/io/json.hpp"

using namespace mph;
namespace fs = std::filesystem;

namespace {

const std::string fixtures = MPH_FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run mph_run(std::vector<std::string> args) {
  args.insert(args.begin(), "mph");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("mph_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

}  // namespace

TEST_CASE("build then present matches the in-memory pipeline bit for bit") {
  const auto points = fixtures + "/octagon_cluster.csv";
  const auto bifcc = (scratch() / "oct.bifcc").string();
  const auto mpres = (scratch() / "oct.mpres").string();
  REQUIRE(mph_run({"build", "--points", points, "--filtration", "degree-rips", "--max-dim", "2", "-o", bifcc}).code == 0);
  REQUIRE(mph_run({"present", bifcc, "--hom", "1", "-o", mpres}).code == 0);

  std::ifstream in(points);
  auto cloud = bifilt::load_points(in, false);
  auto b = bifilt::degree_rips(bifilt::pairwise_distances(cloud), 2);
  auto c = bifilt::free_chain_complex(b, 2, Field(2));
  std::ostringstream bifcc_text;
  io::write_bifcc(bifcc_text, c);
  CHECK(slurp(bifcc) == bifcc_text.str());

  auto p = present::minimize(present::presentation(bifilt::short_complex(c, 1), 1, c.axes));
  std::ostringstream mpres_text;
  io::write_mpres(mpres_text, p);
  CHECK(slurp(mpres) == mpres_text.str());
  CHECK(io::load_mpres(mpres).matrix == p.matrix);
  CHECK(slurp(bifcc).find("axes degree radius - +") != std::string::npos);
}

TEST_CASE("two points give two vertices and one edge") {
  const auto bifcc = (scratch() / "two.bifcc").string();
  REQUIRE(mph_run({"build", "--points", fixtures + "/two_points.csv", "--max-dim", "1", "-o", bifcc}).code == 0);
  std::ifstream in(fixtures + "/two_points.csv");
  auto b = bifilt::degree_rips(bifilt::pairwise_distances(bifilt::load_points(in, false)), 1);
  REQUIRE(b.simplices(0).size() == 2);
  REQUIRE(b.simplices(1).size() == 1);
  const std::vector<Grade> staircase{{-2, 1}, {-1, 0}};
  CHECK(b.simplices(0)[0].births == staircase);
  CHECK(b.simplices(0)[1].births == staircase);
  CHECK(b.simplices(1)[0].births == std::vector<Grade>{{-2, 1}});

  // one copy per vertex birth in F0; F1 holds the edge and one gluing generator per vertex
  auto c = io::load_bifcc(bifcc);
  CHECK(c.boundary[0].num_rows() == 4);
  CHECK(c.boundary[0].num_cols() == 3);
  CHECK(c.boundary[1].num_cols() == 0);
  auto h0 = present::minimize(present::presentation(bifilt::short_complex(c, 0), 0, c.axes));
  CHECK(h0.generators() == 3);
  CHECK(h0.relations() == 2);
}

TEST_CASE("function-Rips and coarsened builds") {
  const auto csv = write("f.csv", "0,0,1\n1,0,2\n0,1,3\n1,1,0.5\n");
  const auto out = (scratch() / "f.bifcc").string();
  for (const char* kind : {"function-rips-super", "function-rips-sub"}) {
    auto r = mph_run({"build", "--points", csv, "--function", "last-column", "--filtration", kind, "--max-dim", "2",
                      "--grid", "3x3", "--field", "3", "-o", out});
    CHECK(r.code == 0);
    auto c = io::load_bifcc(out);
    CHECK(c.field == Field(3));
    CHECK(c.axes.x_reversed == (std::string(kind) == "function-rips-super"));
  }
  CHECK(mph_run({"build", "--points", csv, "--filtration", "function-rips-sub", "-o", out}).code == 2);
  CHECK(mph_run({"build", "--points", csv, "--grid", "3by3", "-o", out}).code == 2);
}

TEST_CASE("empty input is refused") {
  const auto empty = write("empty.csv", "# nothing\n");
  auto r = mph_run({"build", "--points", empty, "-o", (scratch() / "e.bifcc").string()});
  CHECK(r.code != 0);
  CHECK(!r.err.empty());
}

TEST_CASE("invariants report echoes its config and is reproducible") {
  const auto in = fixtures + "/two_generator.mpres";
  auto a = mph_run({"invariants", in});
  auto b = mph_run({"--threads", "4", "invariants", in});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = io::Json::parse(a.out);
  CHECK(j["config"]["command"] == "invariants");
  CHECK(j["config"]["seed"] == 0);
  CHECK(j["config"]["rank"] == true);
  for (const char* key : {"hilbert", "betti", "rank", "signed_barcode"}) CHECK(j.contains(key));
  CHECK(j["betti"]["b0"].dump() == "[[0,0,2]]");

  auto only = io::Json::parse(mph_run({"invariants", in, "--betti"}).out);
  CHECK(!only.contains("hilbert"));
  CHECK(only["betti"] == j["betti"]);

  const auto file = (scratch() / "inv.json").string();
  REQUIRE(mph_run({"invariants", in, "-o", file}).code == 0);
  CHECK(slurp(file) == a.out);
}

TEST_CASE("slice of a free module is one infinite bar") {
  auto r = mph_run({"slice", fixtures + "/free.mpres", "--v", "1,2", "--b", "0,-1"});
  REQUIRE(r.code == 0);
  auto j = io::Json::parse(r.out);
  CHECK(j["bars"].dump() == R"([[0.5,"inf"]])");
}

TEST_CASE("dist of a module with itself is zero") {
  const auto p = fixtures + "/two_generator.mpres";
  auto r = mph_run({"dist", p, p, "--matching", "--lines", "4", "--signed"});
  REQUIRE(r.code == 0);
  auto j = io::Json::parse(r.out);
  CHECK(j["matching_distance"]["value"] == 0);
  CHECK(j["matching_distance"]["lines_sampled"] == 16);
  CHECK(j["signed_bottleneck"] == 0);

  auto d = io::Json::parse(mph_run({"dist", p, fixtures + "/free.mpres"}).out);
  CHECK(d["matching_distance"]["value"] == "inf");
  CHECK(mph_run({"dist", p, fixtures + "/no_good_barcode.mpres"}).code == 3);
}

TEST_CASE("verify passes on the fixtures") {
  for (const char* f : {"/two_generator.mpres", "/no_good_barcode.mpres", "/free.mpres"}) {
    auto r = mph_run({"verify", fixtures + f});
    CHECK(r.code == 0);
    CHECK(io::Json::parse(r.out)["ok"] == true);
  }
}

TEST_CASE("exit codes") {
  CHECK(mph_run({}).code == 2);
  CHECK(mph_run({"frobnicate"}).code == 2);
  CHECK(mph_run({"--help"}).code == 0);
  CHECK(mph_run({"present", "/nonexistent/file.bifcc"}).code == 2);
  CHECK(mph_run({"build", "--points", fixtures + "/two_points.csv", "--max-dim", "3"}).code == 2);

  auto bad = write("bad.mpres", "mpres v1\nfield 2\nhom 0\nrows 1\n0 x\ncols 0\n");
  auto r = mph_run({"verify", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 5") != std::string::npos);

  auto inhomogeneous = write("inhom.mpres", "mpres v1\nfield 2\nhom 0\nrows 1\n1 1\ncols 1\n0 0 : 0\n");
  CHECK(mph_run({"invariants", inhomogeneous}).code == 3);

  const auto p = fixtures + "/free.mpres";
  CHECK(mph_run({"slice", p, "--v", "0,1", "--b", "0,0"}).code == 3);
  CHECK(mph_run({"slice", p, "--v", "1;1", "--b", "0,0"}).code == 2);
  CHECK(mph_run({"slice", p, "--v", "1,one", "--b", "0,0"}).code == 2);
}
