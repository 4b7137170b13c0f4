#include "mph/service/service.hpp"

#include <httplib.h>

#include <regex>

#include "mph/core/errors.hpp"
#include "mph/invariants/rank.hpp"
#include "mph/io/json.hpp"
#include "mph/metrics/matching.hpp"

namespace mph::service {

namespace {

void check_euler(const inv::HilbertFunction& h, const present::Betti& b) {
  const auto& grid = h.grid;
  for (std::size_t j = 0; j < grid.ny(); ++j)
    for (std::size_t i = 0; i < grid.nx(); ++i) {
      const Grade z = grid.effective(i, j);
      long chi = 0;
      for (const auto& [g, n] : b.b0) chi += grade_leq(g, z) ? static_cast<long>(n) : 0;
      for (const auto& [g, n] : b.b1) chi -= grade_leq(g, z) ? static_cast<long>(n) : 0;
      for (const auto& [g, n] : b.b2) chi += grade_leq(g, z) ? static_cast<long>(n) : 0;
      if (chi != static_cast<long>(h.at(i, j)))
        throw ContractError("cached invariants disagree at " + to_string(z));
    }
}

io::Json meta_json(const LoadedModule& m) {
  const auto& p = m.presentation;
  io::Json j;
  j["axes"] = {p.axes.x_name, p.axes.y_name};
  j["dirs"] = {p.axes.x_reversed ? "-" : "+", p.axes.y_reversed ? "-" : "+"};
  j["bounds"] = {{"lo", {io::real(m.lo.x), io::real(m.lo.y)}}, {"hi", {io::real(m.hi.x), io::real(m.hi.y)}}};
  j["hom"] = p.hom;
  j["sizes"] = {{"gens", p.generators()}, {"rels", p.relations()}};
  return j;
}

Response error(int status, const std::string& message) {
  io::Json j;
  j["error"] = message;
  return {status, io::render(j)};
}

}  // namespace

LoadedModule load(present::Presentation p, const LoadOptions& options) {
  LoadedModule m;
  const auto& matrix = p.matrix;
  m.hilbert = inv::hilbert_function(matrix, inv::GradeGrid::covering(matrix, false), options.threads);
  m.minimal = present::minimize(p);
  m.betti = present::betti_numbers(present::minimal_resolution(m.minimal));
  check_euler(m.hilbert, m.betti);
  auto grid = inv::GradeGrid::covering(matrix, !options.finite_grid);
  m.signed_barcode = inv::signed_barcode(inv::rank_invariant(matrix, grid, options.threads));
  std::tie(m.lo, m.hi) = metrics::bounding_box(matrix, matrix);
  m.presentation = std::move(p);
  m.meta_body = io::render(meta_json(m));
  m.hilbert_body = io::render(io::hilbert_json(m.hilbert));
  m.betti_body = io::render(io::betti_json(m.betti));
  m.signed_barcode_body = io::render(io::signed_barcode_json(m.signed_barcode));
  return m;
}

std::string slice_body(const present::Presentation& p, const inv::Line& l) {
  auto line = inv::normalize_line(l);
  return io::render(io::slice_json(line, inv::slice_barcode(p.matrix, line)));
}

Response handle(const LoadedModule& m, const std::string& path, const std::map<std::string, std::string>& params) {
  if (path == "/meta") return {200, m.meta_body};
  if (path == "/hilbert") return {200, m.hilbert_body};
  if (path == "/betti") return {200, m.betti_body};
  if (path == "/signed-barcode") return {200, m.signed_barcode_body};
  if (path != "/slice") return error(404, "unknown endpoint " + path);

  double v[4];
  const char* names[4] = {"vx", "vy", "bx", "by"};
  for (int k = 0; k < 4; ++k) {
    auto it = params.find(names[k]);
    if (it == params.end()) return error(400, std::string("missing parameter ") + names[k]);
    try {
      v[k] = parse_real(it->second, 0);
    } catch (const ParseError& e) {
      return error(400, std::string("parameter ") + names[k] + ": " + e.what());
    }
  }
  try {
    return {200, slice_body(m.minimal, {{v[0], v[1]}, {v[2], v[3]}})};
  } catch (const ContractError& e) {
    return error(400, std::string("inadmissible line: ") + e.what());
  }
}

bool origin_allowed(const std::string& origin, const ServerOptions& options) {
  static const std::regex local(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:[0-9]+)?$)");
  if (origin.empty()) return false;
  if (!options.allow_origin.empty() && (options.allow_origin == "*" || options.allow_origin == origin)) return true;
  return std::regex_match(origin, local);
}

void install(httplib::Server& server, const LoadedModule& m, const ServerOptions& options) {
  auto answer = [&m, options](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);
    auto r = handle(m, req.path, params);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
    auto origin = req.get_header_value("Origin");
    if (origin_allowed(origin, options)) {
      res.set_header("Access-Control-Allow-Origin", options.allow_origin == "*" ? "*" : origin);
      res.set_header("Vary", "Origin");
    }
  };
  for (const char* path : {"/meta", "/hilbert", "/betti", "/signed-barcode", "/slice"}) server.Get(path, answer);
  server.Get(".*", answer);
}

bool serve(const LoadedModule& m, const ServerOptions& options) {
  httplib::Server server;
  install(server, m, options);
  return server.listen(options.host, options.port);
}

}  // namespace mph::service
