#include "mph/io/json.hpp"

#include <cmath>
#include <cstdint>

namespace mph::io {

Json real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == std::trunc(v) && std::fabs(v) < 9007199254740992.0) return static_cast<std::int64_t>(v);
  return v;
}

namespace {

Json values(const std::vector<double>& vs, bool sentinel) {
  Json out = Json::array();
  for (double v : vs) out.push_back(real(v));
  if (sentinel && !vs.empty()) out.push_back("inf");
  return out;
}

Json counts(const present::GradeCounts& c) {
  Json out = Json::array();
  for (const auto& [g, n] : c) out.push_back({real(g.x), real(g.y), n});
  return out;
}

Json rectangles(const std::vector<inv::Rectangle>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back({real(r.lo.x), real(r.lo.y), real(r.hi.x), real(r.hi.y), r.multiplicity});
  return out;
}

}  // namespace

Json hilbert_json(const inv::HilbertFunction& h) {
  Json j;
  j["xs"] = values(h.grid.xs(), h.grid.sentinel_x());
  j["ys"] = values(h.grid.ys(), h.grid.sentinel_y());
  j["dims"] = h.dims;
  return j;
}

Json betti_json(const present::Betti& b) {
  Json j;
  j["b0"] = counts(b.b0);
  j["b1"] = counts(b.b1);
  j["b2"] = counts(b.b2);
  return j;
}

Json rank_json(const inv::RankInvariant& r) {
  const auto& g = r.grid();
  Json ranks = Json::array();
  for (std::size_t sj = 0; sj < g.ny(); ++sj)
    for (std::size_t si = 0; si < g.nx(); ++si)
      for (std::size_t tj = sj; tj < g.ny(); ++tj)
        for (std::size_t ti = si; ti < g.nx(); ++ti)
          if (auto k = r(si, sj, ti, tj))
            ranks.push_back({real(g.x(si)), real(g.y(sj)), real(g.x(ti)), real(g.y(tj)), k});
  Json j;
  j["xs"] = values(g.xs(), g.sentinel_x());
  j["ys"] = values(g.ys(), g.sentinel_y());
  j["ranks"] = std::move(ranks);
  return j;
}

Json signed_barcode_json(const inv::SignedBarcode& b) {
  Json j;
  j["positive"] = rectangles(b.positive);
  j["negative"] = rectangles(b.negative);
  return j;
}

Json slice_json(const inv::Line& l, const inv::Barcode1D& bars) {
  Json j;
  j["line"] = {{"vx", real(l.v.x)}, {"vy", real(l.v.y)}, {"bx", real(l.b.x)}, {"by", real(l.b.y)}};
  Json bs = Json::array();
  for (const auto& i : bars) bs.push_back({real(i.birth), real(i.death)});
  j["bars"] = std::move(bs);
  return j;
}

Json axes_json(const bifilt::Axes& a) {
  return {{"names", {a.x_name, a.y_name}}, {"dirs", {a.x_reversed ? "-" : "+", a.y_reversed ? "-" : "+"}}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mph::io
