#include "lrpc/bound.hpp"

#include "lrpc/errors.hpp"

namespace lrpc {

namespace {

using boost::multiprecision::cpp_int;

cpp_int big_pow(std::uint64_t q, std::size_t e) {
  cpp_int out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= q;
  return out;
}

/// q^e for a possibly negative exponent.
Rational qpow(std::uint64_t q, long long e) {
  if (e >= 0) return Rational(big_pow(q, static_cast<std::size_t>(e)));
  return Rational(cpp_int(1), big_pow(q, static_cast<std::size_t>(-e)));
}

}  // namespace

Rational success_bound_exact(const BoundInput& in) {
  if (in.q < 2 || in.lambda == 0 || in.k >= in.n) throw Error(ErrorCode::InvalidConfig, "need q >= 2, lambda >= 1, k < n");
  const std::size_t tri = in.t * in.lambda * (in.lambda + 1) / 2;
  const std::size_t r = in.n - in.k;
  if (tri >= in.m || in.t * in.lambda >= r + 1) {
    throw Error(ErrorCode::HypothesisViolated, "bound requires t*lambda*(lambda+1)/2 < m and t*lambda < n-k+1");
  }
  Rational out = Rational(1) - Rational(static_cast<long long>(in.t)) * qpow(in.q, static_cast<long long>(tri) - static_cast<long long>(in.m));
  for (std::size_t i = 0; i < in.t * in.lambda; ++i) {
    out *= Rational(1) - qpow(in.q, static_cast<long long>(i) - static_cast<long long>(r));
  }
  return out;
}

Rational theoretical_bound(const BoundInput& in) {
  Rational b = success_bound_exact(in);
  if (b < 0) return Rational(0);
  if (b > 1) return Rational(1);
  return b;
}

Rational product_bound(const std::vector<BoundInput>& factors) {
  Rational out = 1;
  for (const auto& f : factors) out *= theoretical_bound(f);
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_decimal(const Rational& r, int precision) {
  if (precision < 0) precision = 0;
  const bool neg = r < 0;
  const Rational a = neg ? Rational(-r) : r;
  const cpp_int scale = big_pow(10, static_cast<std::size_t>(precision));
  const cpp_int num = boost::multiprecision::numerator(a) * scale * 2 + boost::multiprecision::denominator(a);
  const cpp_int scaled = num / (boost::multiprecision::denominator(a) * 2);
  std::string digits = scaled.str();
  if (digits.size() <= static_cast<std::size_t>(precision)) digits.insert(0, precision + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - precision);
  if (precision > 0) out += "." + digits.substr(digits.size() - precision);
  return (neg && scaled != 0 ? "-" : "") + out;
}

}  // namespace lrpc
