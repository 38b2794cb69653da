#pragma once

#include <json.hpp>
#include <string>

#include "lrpc/product_ring.hpp"

namespace lrpc {

inline constexpr const char* kCodeFormat = "lrpc-ring/1";

/// JSON dump of a code: ring spec, per-factor extension modulus, F basis and H,
/// with elements as flat coordinate lists.
nlohmann::json code_to_json(const ProductLrpcCode& code, const std::string& ring_spec);

struct LoadedCode {
  std::string ring_spec;
  ProductLrpcCode code;
};

/// Throws ParseError on malformed documents and the usual construction
/// errors when the stored data is inconsistent.
LoadedCode code_from_json(const nlohmann::json& doc);

}  // namespace lrpc
