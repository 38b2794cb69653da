#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrpc/product_ring.hpp"

namespace lrpc {

/// Integer polynomial in x, coefficients low to high. Accepts sparse forms
/// such as "x^2", "x^2+2*x+2", "3x-1".
std::vector<std::int64_t> parse_polynomial(std::string_view text);

struct RingSpec {
  ProductRing ring;
  std::optional<ProductExtension> ext;
};

/// Grammar:
///   spec   := local ('x' local)* ['ext' 'm=' INT ['f=' poly]]
///   local  := 'Z' INT ['[x]/(' poly ')'] | 'GR(' INT ['^' INT] ',' INT ')'
/// Z N with composite N is split into its prime-power factors.
RingSpec parse_ring_spec(std::string_view text);

/// A single local ring; throws NotLocal when the spec splits into several factors.
RingPtr parse_local_ring_spec(std::string_view text);

/// Parses "m=<int> [f=<poly>]" (with or without a leading "ext") against a ring.
ProductExtension parse_extension_spec(const ProductRing& ring, std::string_view text);

}  // namespace lrpc
