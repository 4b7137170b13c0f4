#pragma once

#include <map>
#include <string>

#include "mph/invariants/barcode.hpp"
#include "mph/invariants/hilbert.hpp"
#include "mph/invariants/signed_barcode.hpp"
#include "mph/present/presentation.hpp"

namespace httplib {
class Server;
}

namespace mph::service {

/// Immutable module state: the presentation and its cached invariants, each also kept as
/// the exact response body.
struct LoadedModule {
  present::Presentation presentation;
  present::Presentation minimal;  // same module, answers /slice
  inv::HilbertFunction hilbert;
  present::Betti betti;
  inv::SignedBarcode signed_barcode;
  Grade lo, hi;

  std::string meta_body, hilbert_body, betti_body, signed_barcode_body;
};

struct LoadOptions {
  unsigned threads = 1;
  bool finite_grid = false;  // no sentinel indices for the signed barcode
};

/// Computes the cached invariants and checks them against each other once (Hilbert
/// function against the Euler characteristic of the minimal resolution); ContractError on
/// disagreement.
LoadedModule load(present::Presentation p, const LoadOptions& options = {});

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// The slice body shared with `mph slice`; ContractError on an inadmissible line.
std::string slice_body(const present::Presentation& p, const inv::Line& l);

/// Answers GET `path` with query parameters; no network involved.
Response handle(const LoadedModule& m, const std::string& path, const std::map<std::string, std::string>& params);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string allow_origin;  // exact extra origin (or "*") besides localhost origins
};

/// True iff the origin may receive CORS headers.
bool origin_allowed(const std::string& origin, const ServerOptions& options);

/// Registers the endpoints on `server`.
void install(httplib::Server& server, const LoadedModule& m, const ServerOptions& options);

/// Blocks serving `m`; returns false if the socket cannot be bound.
bool serve(const LoadedModule& m, const ServerOptions& options);

}  // namespace mph::service
