#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrpc/matrix.hpp"
#include "lrpc/random.hpp"
#include "lrpc/zmod.hpp"

namespace lrpc {

/// Element of F_q = F_p[X]/(h), stored as its mu coefficients in [0, p).
using FqElem = boost::container::small_vector<Coeff, 4>;

/// The finite field F_p[X]/(h) for a monic irreducible h of degree mu over F_p.
/// Irreducibility of h is the caller's responsibility (see is_irreducible).
class FiniteField {
 public:
  FiniteField() = default;
  /// h: coefficients low to high, monic (last entry 1), each in [0, p).
  FiniteField(Coeff p, std::vector<Coeff> h);
  static FiniteField prime_field(Coeff p) { return FiniteField(p, {0, 1}); }

  Coeff p() const noexcept { return p_; }
  unsigned mu() const noexcept { return static_cast<unsigned>(h_.size() - 1); }
  std::uint64_t size() const noexcept { return q_; }
  const std::vector<Coeff>& modulus() const noexcept { return h_; }

  FqElem zero() const { return FqElem(mu(), 0); }
  FqElem one() const {
    FqElem e(mu(), 0);
    e[0] = 1;
    return e;
  }
  FqElem from_int(std::int64_t v) const {
    FqElem e(mu(), 0);
    auto r = v % static_cast<std::int64_t>(p_);
    e[0] = static_cast<Coeff>(r < 0 ? r + p_ : r);
    return e;
  }
  bool is_zero(const FqElem& a) const noexcept {
    for (auto c : a)
      if (c != 0) return false;
    return true;
  }

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem pow(FqElem a, std::uint64_t e) const;
  FqElem inverse(const FqElem& a) const;  // throws NotAUnit on zero

  /// Bijection [0, q) <-> F_q used for enumeration and hashing.
  FqElem element(std::uint64_t index) const;
  std::uint64_t index_of(const FqElem& a) const;

  FqElem random(Rng& rng) const;

  /// Row rank by Gaussian elimination.
  std::size_t rank(Matrix<FqElem> m) const;

 private:
  Coeff p_ = 2;
  std::vector<Coeff> h_{0, 1};
  std::uint64_t q_ = 2;
};

/// Polynomials over a FiniteField, coefficients low to high, no trailing zeros.
using FqPoly = std::vector<FqElem>;

namespace fqpoly {

void trim(const FiniteField& F, FqPoly& a);
int degree(const FqPoly& a);
FqPoly x_poly(const FiniteField& F);
FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly mod(const FiniteField& F, const FqPoly& a, const FqPoly& b);
/// Monic gcd.
FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b);
FqPoly powmod(const FiniteField& F, FqPoly base, std::uint64_t e, const FqPoly& modulus);
/// Rabin's test; f must have positive degree.
bool is_irreducible(const FiniteField& F, const FqPoly& f);
/// If f (monic, over F) equals phi^e for one monic irreducible phi, returns phi.
std::optional<FqPoly> irreducible_power_root(const FiniteField& F, const FqPoly& f);
/// First monic irreducible of the given degree whose lower coefficients, read
/// as base-|alphabet| digits, are lexicographically smallest. When
/// prime_subfield_only is set the coefficients are restricted to F_p.
std::optional<FqPoly> first_irreducible(const FiniteField& F, unsigned degree, bool prime_subfield_only);

}  // namespace fqpoly

}  // namespace lrpc
