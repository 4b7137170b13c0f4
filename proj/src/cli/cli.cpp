#include "mph/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mph/bifilt/builders.hpp"
#include "mph/bifilt/chain_complex.hpp"
#include "mph/core/errors.hpp"
#include "mph/invariants/hilbert.hpp"
#include "mph/invariants/rank.hpp"
#include "mph/invariants/signed_barcode.hpp"
#include "mph/io/formats.hpp"
#include "mph/io/json.hpp"
#include "mph/metrics/bottleneck.hpp"
#include "mph/metrics/matching.hpp"
#include "mph/oracle/verify.hpp"
#include "mph/service/service.hpp"

namespace mph::cli {

namespace {

struct Options {
  std::uint64_t seed = 0;
  unsigned threads = 1;

  std::string input, second, output;

  std::string points, distances, function, filtration = "degree-rips", grid;
  int max_dim = 1;
  std::uint32_t field = 2;

  int hom = 0;
  bool no_minimize = false;

  bool hilbert = false, betti = false, rank = false, signed_barcode = false, finite_grid = false;

  std::string v, b;

  bool matching = false, signed_distance = false;
  std::size_t lines = 10;

  std::string host = "127.0.0.1", allow_origin;
  int port = 8080;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned resolved_threads(const Options& o) {
  if (o.threads != 0) return o.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f.flush()) throw std::runtime_error("cannot write " + path);
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return f;
}

Grade parse_pair(const std::string& text, const std::string& what) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError(what + ": expected two comma-separated numbers, got '" + text + "'");
  try {
    return {parse_real(text.substr(0, comma), 0), parse_real(text.substr(comma + 1), 0)};
  } catch (const ParseError& e) {
    throw ParseError(what + ": " + e.what());
  }
}

bifilt::GridSpec parse_grid(const std::string& text) {
  auto x = text.find('x');
  std::size_t nx = 0, ny = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    nx = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    ny = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw ParseError("--grid: expected NXxNY, got '" + text + "'");
  }
  return {nx, ny};
}

io::Json config_json(const std::string& command, const Options& o) {
  io::Json j;
  j["command"] = command;
  j["seed"] = o.seed;
  return j;
}

void cmd_build(const Options& o, std::ostream& out) {
  const bool function_rips = o.filtration != "degree-rips";
  if (function_rips && o.function != "last-column")
    throw ParseError("--filtration " + o.filtration + " needs --function last-column");
  if (!o.function.empty() && o.points.empty()) throw ParseError("--function last-column needs --points");

  bifilt::DistanceMatrix d;
  std::optional<std::vector<double>> values;
  if (!o.points.empty()) {
    auto in = open(o.points);
    auto cloud = bifilt::load_points(in, !o.function.empty());
    d = bifilt::pairwise_distances(cloud);
    values = cloud.values;
  } else {
    auto in = open(o.distances);
    d = bifilt::load_distances(in);
  }
  if (d.size() == 0) throw ContractError("empty input: no points");

  std::optional<bifilt::GridSpec> grid;
  if (!o.grid.empty()) grid = parse_grid(o.grid);
  bifilt::Bifiltration b;
  if (!function_rips) {
    b = bifilt::degree_rips(d, o.max_dim, grid);
  } else {
    auto level = o.filtration == "function-rips-super" ? bifilt::Level::super : bifilt::Level::sub;
    b = bifilt::function_rips(d, *values, level, o.max_dim, grid);
  }
  std::ostringstream text;
  io::write_bifcc(text, bifilt::free_chain_complex(b, 2, Field(o.field)));
  emit(o.output, text.str(), out);
}

void cmd_present(const Options& o, std::ostream& out) {
  auto c = io::load_bifcc(o.input);
  auto p = present::presentation(bifilt::short_complex(c, o.hom), o.hom, c.axes);
  if (!o.no_minimize) p = present::minimize(p);
  std::ostringstream text;
  io::write_mpres(text, p);
  emit(o.output, text.str(), out);
}

void cmd_invariants(Options o, std::ostream& out) {
  if (!o.hilbert && !o.betti && !o.rank && !o.signed_barcode) o.hilbert = o.betti = o.rank = o.signed_barcode = true;
  const auto p = io::load_mpres(o.input);
  const auto& matrix = p.matrix;
  const unsigned threads = resolved_threads(o);

  io::Json j;
  auto config = config_json("invariants", o);
  config["input"] = o.input;
  config["hilbert"] = o.hilbert;
  config["betti"] = o.betti;
  config["rank"] = o.rank;
  config["signed_barcode"] = o.signed_barcode;
  config["finite_grid"] = o.finite_grid;
  j["config"] = config;
  j["field"] = p.field().characteristic();
  j["hom"] = p.hom;
  j["axes"] = io::axes_json(p.axes);

  if (o.hilbert)
    j["hilbert"] = io::hilbert_json(inv::hilbert_function(matrix, inv::GradeGrid::covering(matrix, false), threads));
  if (o.betti) j["betti"] = io::betti_json(present::betti_numbers(present::minimal_resolution(present::minimize(p))));
  if (o.rank || o.signed_barcode) {
    auto ranks = inv::rank_invariant(matrix, inv::GradeGrid::covering(matrix, !o.finite_grid), threads);
    if (o.rank) j["rank"] = io::rank_json(ranks);
    if (o.signed_barcode) j["signed_barcode"] = io::signed_barcode_json(inv::signed_barcode(ranks));
  }
  emit(o.output, io::render(j), out);
}

void cmd_slice(const Options& o, std::ostream& out) {
  const inv::Line line{parse_pair(o.v, "--v"), parse_pair(o.b, "--b")};
  out << service::slice_body(io::load_mpres(o.input), line);
}

void cmd_dist(Options o, std::ostream& out) {
  if (!o.matching && !o.signed_distance) o.matching = true;
  if (o.lines == 0) throw ParseError("--lines must be positive");
  const auto a = io::load_mpres(o.input);
  const auto b = io::load_mpres(o.second);
  const unsigned threads = resolved_threads(o);

  io::Json j;
  auto config = config_json("dist", o);
  config["inputs"] = {o.input, o.second};
  config["matching"] = o.matching;
  config["signed"] = o.signed_distance;
  config["lines"] = o.lines;
  j["config"] = config;

  if (o.matching) {
    auto r = metrics::matching_distance(a, b, o.lines, threads);
    io::Json m;
    m["value"] = io::real(r.value);
    m["lower_bound"] = true;
    m["lines_sampled"] = o.lines * o.lines;
    m["line"] = {{"v", {io::real(r.line.v.x), io::real(r.line.v.y)}}, {"b", {io::real(r.line.b.x), io::real(r.line.b.y)}}};
    j["matching_distance"] = m;
  }
  if (o.signed_distance) {
    if (a.field() != b.field() || a.axes != b.axes) throw ContractError("modules differ in field or axes");
    auto sb = [threads](const present::Presentation& p) {
      return inv::signed_barcode(inv::rank_invariant(p.matrix, inv::GradeGrid::covering(p.matrix, true), threads));
    };
    j["signed_bottleneck"] = io::real(metrics::bottleneck_signed(metrics::half_open(sb(a)), metrics::half_open(sb(b))));
  }
  emit(o.output, io::render(j), out);
}

void cmd_verify(const Options& o, std::ostream& out) {
  const auto p = io::load_mpres(o.input);
  auto found = oracle::verify(p, resolved_threads(o));
  io::Json j;
  j["input"] = o.input;
  j["ok"] = !found.has_value();
  if (found) j["discrepancy"] = {{"check", found->check}, {"detail", found->detail}};
  out << io::render(j);
  if (found) throw VerificationFailure(found->check + ": " + found->detail);
}

void cmd_serve(const Options& o, std::ostream& err) {
  service::LoadOptions load;
  load.threads = resolved_threads(o);
  load.finite_grid = o.finite_grid;
  auto m = service::load(io::load_mpres(o.input), load);
  service::ServerOptions server{o.host, o.port, o.allow_origin};
  err << "serving " << o.input << " on http://" << o.host << ':' << o.port << std::endl;
  if (!service::serve(m, server)) throw std::runtime_error("cannot listen on " + o.host + ":" + std::to_string(o.port));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-parameter persistent homology toolkit", "mph"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", o.seed, "Seed for all randomized steps");
  app.add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");

  auto* build = app.add_subcommand("build", "Build a bifiltration and write its free chain complex (bifcc)");
  auto* points = build->add_option("--points", o.points, "Point cloud CSV")->check(CLI::ExistingFile);
  auto* distances = build->add_option("--distances", o.distances, "Distance matrix file")->check(CLI::ExistingFile);
  points->excludes(distances);
  build->add_option("--function", o.function, "Scalar function source")->check(CLI::IsMember({"last-column"}));
  build->add_option("--filtration", o.filtration)
      ->check(CLI::IsMember({"degree-rips", "function-rips-super", "function-rips-sub"}));
  build->add_option("--max-dim", o.max_dim, "Largest simplex dimension")->check(CLI::Range(1, 2));
  build->add_option("--grid", o.grid, "Coarsen to NXxNY grid values");
  build->add_option("--field", o.field, "Prime characteristic of the coefficient field");
  build->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* present = app.add_subcommand("present", "Minimal presentation of H_i from a bifcc file (mpres)");
  present->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  present->add_option("--hom", o.hom, "Homology degree")->check(CLI::Range(0, 1));
  present->add_flag("--no-minimize", o.no_minimize, "Keep the unminimized presentation");
  present->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* invariants = app.add_subcommand("invariants", "Hilbert function, Betti numbers, rank invariant, signed barcode");
  invariants->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  invariants->add_flag("--hilbert", o.hilbert);
  invariants->add_flag("--betti", o.betti);
  invariants->add_flag("--rank", o.rank);
  invariants->add_flag("--signed-barcode", o.signed_barcode);
  invariants->add_flag("--finite-grid", o.finite_grid, "No +inf grid values for rank and signed barcode");
  invariants->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* slice = app.add_subcommand("slice", "Barcode of the restriction to the line b + t v");
  slice->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  slice->add_option("--v", o.v, "Direction VX,VY")->required();
  slice->add_option("--b", o.b, "Base point BX,BY")->required();

  auto* dist = app.add_subcommand("dist", "Distances between two presentations");
  dist->add_option("a", o.input)->required()->check(CLI::ExistingFile);
  dist->add_option("b", o.second)->required()->check(CLI::ExistingFile);
  dist->add_flag("--matching", o.matching, "Sampled matching distance (default)");
  dist->add_option("--lines", o.lines, "Sample N x N lines");
  dist->add_flag("--signed", o.signed_distance, "Bottleneck distance between signed barcodes");
  dist->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Check fast invariants against the brute-force oracle");
  verify->add_option("input", o.input)->required()->check(CLI::ExistingFile);

  auto* serve = app.add_subcommand("serve", "Serve the invariants of a presentation over HTTP");
  serve->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  serve->add_option("--host", o.host);
  serve->add_option("--port", o.port)->check(CLI::Range(0, 65535));
  serve->add_option("--allow-origin", o.allow_origin, "Extra CORS origin, or *");
  serve->add_flag("--finite-grid", o.finite_grid);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "mph: " << e.what() << '\n';
    return parse_error;
  }

  try {
    if (*build) cmd_build(o, out);
    if (*present) cmd_present(o, out);
    if (*invariants) cmd_invariants(o, out);
    if (*slice) cmd_slice(o, out);
    if (*dist) cmd_dist(o, out);
    if (*verify) cmd_verify(o, out);
    if (*serve) cmd_serve(o, err);
  } catch (const ParseError& e) {
    err << "mph: parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const ContractError& e) {
    err << "mph: " << e.what() << '\n';
    return contract_error;
  } catch (const VerificationFailure& e) {
    err << "mph: verification failed: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::exception& e) {
    err << "mph: " << e.what() << '\n';
    return failure;
  }
  return ok;
}

}  // namespace mph::cli
