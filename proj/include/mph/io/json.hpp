#pragma once

#include <string>

#include <json.hpp>

#include "mph/bifilt/bifiltration.hpp"
#include "mph/invariants/barcode.hpp"
#include "mph/invariants/hilbert.hpp"
#include "mph/invariants/rank.hpp"
#include "mph/invariants/signed_barcode.hpp"
#include "mph/present/presentation.hpp"

namespace mph::io {

using Json = nlohmann::ordered_json;

/// Integral values as integers, +inf as "inf", everything else as a shortest round-trip double.
Json real(double v);

/// {xs, ys, dims} with dims row-major by y.
Json hilbert_json(const inv::HilbertFunction& h);
/// {b0, b1, b2: [[x, y, mult], ...]}.
Json betti_json(const present::Betti& b);
/// {xs, ys, ranks: [[sx, sy, tx, ty, r], ...]} for nonzero ranks.
Json rank_json(const inv::RankInvariant& r);
/// {positive, negative: [[lx, ly, hx, hy, mult], ...]}.
Json signed_barcode_json(const inv::SignedBarcode& b);
/// {line: {vx, vy, bx, by}, bars: [[birth, death], ...]}.
Json slice_json(const inv::Line& l, const inv::Barcode1D& bars);
/// {names: [x, y], dirs: ["+"|"-", ...]}.
Json axes_json(const bifilt::Axes& a);

/// Text form shared by files, stdout and HTTP bodies.
std::string render(const Json& j);

}  // namespace mph::io
