#include "lrpc/zmod.hpp"

#include <limits>

#include "lrpc/errors.hpp"

namespace lrpc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::MalformedModulus: return "MalformedModulus";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ExtensionMismatch: return "ExtensionMismatch";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::OneNotInModule: return "OneNotInModule";
    case ErrorCode::NoSuitableBasis: return "NoSuitableBasis";
    case ErrorCode::NotInF: return "NotInF";
    case ErrorCode::NoInvertibleMinor: return "NoInvertibleMinor";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

ZMod::ZMod(Coeff p, unsigned s) : p_(p), s_(s) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0) throw Error(ErrorCode::MalformedModulus, "characteristic exponent must be >= 1");
  std::uint64_t n = ipow(p, s);
  if (n > (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::UnsupportedRing, "characteristic p^s must not exceed 2^31");
  }
  n_ = static_cast<Coeff>(n);
}

unsigned ZMod::valuation(Coeff a) const noexcept {
  if (a == 0) return s_;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Coeff ZMod::inverse(Coeff a) const {
  if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, std::to_string(a) + " mod " + std::to_string(n_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = n_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace lrpc
