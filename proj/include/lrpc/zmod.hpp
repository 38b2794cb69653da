#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lrpc {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// If n = p^s for a prime p, returns (p, s); otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Arithmetic in the chain ring Z/p^s. Values are kept in [0, p^s).
class ZMod {
 public:
  ZMod() = default;
  ZMod(Coeff p, unsigned s);

  Coeff p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  Coeff modulus() const noexcept { return n_; }

  Coeff reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(n_);
    return static_cast<Coeff>(r < 0 ? r + n_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t r = std::uint64_t{a} + b;
    return static_cast<Coeff>(r >= n_ ? r - n_ : r);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + (n_ - b); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : n_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % n_);
  }

  /// p-adic valuation; the valuation of 0 is s.
  unsigned valuation(Coeff a) const noexcept;
  bool is_unit(Coeff a) const noexcept { return a % p_ != 0; }
  Coeff inverse(Coeff a) const;  // throws NotAUnit
  Coeff pow_p(unsigned e) const noexcept { return e >= s_ ? 0 : static_cast<Coeff>(ipow(p_, e)); }

  /// Returns q with q * p^v == a (mod p^s); requires valuation(a) >= v.
  Coeff divide_by_p_power(Coeff a, unsigned v) const noexcept {
    return static_cast<Coeff>(a / ipow(p_, v));
  }

  friend bool operator==(const ZMod& a, const ZMod& b) { return a.n_ == b.n_; }

 private:
  Coeff p_ = 2;
  unsigned s_ = 1;
  Coeff n_ = 2;
};

}  // namespace lrpc
