#include "lrpc/residue_field.hpp"

#include <algorithm>

#include "lrpc/errors.hpp"

namespace lrpc {

FiniteField::FiniteField(Coeff p, std::vector<Coeff> h) : p_(p), h_(std::move(h)) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (h_.size() < 2 || h_.back() != 1) {
    throw Error(ErrorCode::MalformedModulus, "residue field modulus must be monic of degree >= 1");
  }
  for (auto& c : h_) c %= p_;
  q_ = ipow(p_, mu());
}

FqElem FiniteField::add(const FqElem& a, const FqElem& b) const {
  FqElem r(mu());
  for (unsigned i = 0; i < mu(); ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FqElem FiniteField::sub(const FqElem& a, const FqElem& b) const {
  FqElem r(mu());
  for (unsigned i = 0; i < mu(); ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FqElem FiniteField::neg(const FqElem& a) const {
  FqElem r(mu());
  for (unsigned i = 0; i < mu(); ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

FqElem FiniteField::mul(const FqElem& a, const FqElem& b) const {
  const unsigned n = mu();
  if (n == 1) return FqElem{static_cast<Coeff>((std::uint64_t{a[0]} * b[0]) % p_)};
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
  }
  for (unsigned d = 2 * n - 2; d >= n; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < n; ++i) {
      prod[d - n + i] = (prod[d - n + i] + (p_ - h_[i]) % p_ * c) % p_;
    }
  }
  FqElem r(n);
  for (unsigned i = 0; i < n; ++i) r[i] = static_cast<Coeff>(prod[i]);
  return r;
}

FqElem FiniteField::pow(FqElem a, std::uint64_t e) const {
  FqElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqElem FiniteField::inverse(const FqElem& a) const {
  if (is_zero(a)) throw Error(ErrorCode::NotAUnit, "zero has no inverse in the residue field");
  return pow(a, q_ - 2);
}

FqElem FiniteField::element(std::uint64_t index) const {
  FqElem e(mu());
  for (unsigned i = 0; i < mu(); ++i) {
    e[i] = static_cast<Coeff>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index_of(const FqElem& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = mu(); i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

FqElem FiniteField::random(Rng& rng) const {
  FqElem e(mu());
  for (auto& c : e) c = static_cast<Coeff>(uniform_below(rng, p_));
  return e;
}

std::size_t FiniteField::rank(Matrix<FqElem> m) const {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const FqElem inv = inverse(m(r, col));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      const FqElem factor = mul(m(i, col), inv);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = sub(m(i, j), mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

namespace fqpoly {

void trim(const FiniteField& F, FqPoly& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

int degree(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

FqPoly x_poly(const FiniteField& F) { return {F.zero(), F.one()}; }

FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(F, r);
  return r;
}

FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(F, r);
  return r;
}

std::pair<FqPoly, FqPoly> divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw Error(ErrorCode::MalformedModulus, "polynomial division by zero");
  FqPoly rem = a;
  trim(F, rem);
  const int db = degree(b);
  if (degree(rem) < db) return {{}, rem};
  FqPoly quot(rem.size() - b.size() + 1, F.zero());
  const FqElem lead_inv = F.inverse(b.back());
  for (int d = degree(rem); d >= db; --d) {
    const FqElem c = F.mul(rem[d], lead_inv);
    if (F.is_zero(c)) continue;
    quot[d - db] = c;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = F.sub(rem[d - db + i], F.mul(c, b[i]));
  }
  trim(F, rem);
  trim(F, quot);
  return {quot, rem};
}

FqPoly mod(const FiniteField& F, const FqPoly& a, const FqPoly& b) { return divmod(F, a, b).second; }

FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    FqPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const FqElem inv = F.inverse(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

FqPoly powmod(const FiniteField& F, FqPoly base, std::uint64_t e, const FqPoly& modulus) {
  FqPoly result{F.one()};
  base = mod(F, base, modulus);
  while (e > 0) {
    if (e & 1) result = mod(F, mul(F, result, base), modulus);
    base = mod(F, mul(F, base, base), modulus);
    e >>= 1;
  }
  return mod(F, result, modulus);
}

bool is_irreducible(const FiniteField& F, const FqPoly& f) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const std::uint64_t q = F.size();
  // frob[i] = X^(q^i) mod f
  std::vector<FqPoly> frob(n + 1);
  frob[0] = mod(F, x_poly(F), f);
  for (int i = 1; i <= n; ++i) frob[i] = powmod(F, frob[i - 1], q, f);
  if (sub(F, frob[n], frob[0]).size() != 0) return false;
  for (auto [r, e] : factorize(static_cast<std::uint64_t>(n))) {
    (void)e;
    FqPoly g = gcd(F, f, sub(F, frob[n / r], x_poly(F)));
    if (degree(g) != 0) return false;
  }
  return true;
}

std::optional<FqPoly> irreducible_power_root(const FiniteField& F, const FqPoly& f) {
  const int n = degree(f);
  if (n <= 0) return std::nullopt;
  const std::uint64_t q = F.size();
  FqPoly frob = mod(F, x_poly(F), f);
  FqPoly phi;
  for (int i = 1; i <= n; ++i) {
    frob = powmod(F, frob, q, f);
    FqPoly g = gcd(F, f, sub(F, frob, x_poly(F)));
    if (degree(g) <= 0) continue;
    // Smallest i with a nontrivial gcd: g is the product of the distinct
    // irreducible factors of degree i.
    if (degree(g) != i) return std::nullopt;
    phi = g;
    break;
  }
  if (phi.empty()) return std::nullopt;
  FqPoly rest = f;
  while (degree(rest) > 0) {
    auto [quot, rem] = divmod(F, rest, phi);
    if (!rem.empty()) return std::nullopt;
    rest = quot;
  }
  return phi;
}

std::optional<FqPoly> first_irreducible(const FiniteField& F, unsigned degree_wanted, bool prime_subfield_only) {
  const std::uint64_t alphabet = prime_subfield_only ? F.p() : F.size();
  // Guard against an astronomically large search; every degree has an
  // irreducible among the first few thousand candidates in practice.
  const std::uint64_t limit = 1u << 22;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < degree_wanted && total < limit; ++i) total *= alphabet;
  for (std::uint64_t code = 0; code < std::min(total, limit); ++code) {
    FqPoly f(degree_wanted + 1, F.zero());
    f[degree_wanted] = F.one();
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree_wanted; ++i) {
      const std::uint64_t digit = c % alphabet;
      c /= alphabet;
      f[i] = prime_subfield_only ? F.from_int(static_cast<std::int64_t>(digit)) : F.element(digit);
    }
    if (is_irreducible(F, f)) return f;
  }
  return std::nullopt;
}

}  // namespace fqpoly

}  // namespace lrpc
