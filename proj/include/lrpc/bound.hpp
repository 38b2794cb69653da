#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace lrpc {

using Rational = boost::multiprecision::cpp_rational;

struct BoundInput {
  std::uint64_t q = 2;
  std::size_t lambda = 1;
  std::size_t t = 0;
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 0;
};

/// (1 - t q^{t lambda (lambda+1)/2 - m}) * prod_{i<t lambda} (1 - q^{i-(n-k)}),
/// exact and unclamped. Throws HypothesisViolated unless
/// t lambda (lambda+1)/2 < m and t lambda < n-k+1.
Rational success_bound_exact(const BoundInput& in);
/// The same value clamped to [0, 1].
Rational theoretical_bound(const BoundInput& in);
/// Product over the factors of a product ring of the clamped local bounds.
Rational product_bound(const std::vector<BoundInput>& factors);

double to_double(const Rational& r);
/// Decimal string with the given number of digits after the point (rounded half up).
std::string to_decimal(const Rational& r, int precision);

}  // namespace lrpc
