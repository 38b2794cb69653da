#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lrpc/matrix.hpp"
#include "lrpc/random.hpp"
#include "lrpc/residue_field.hpp"
#include "lrpc/zmod.hpp"

namespace lrpc {

/// Galois ring GR(p^s, mu) = Z_{p^s}[X]/(h).
struct GaloisRingParams {
  Coeff p = 2;
  unsigned s = 1;
  unsigned mu = 1;
  std::vector<Coeff> h{0, 1};  // monic, low to high
};

/// Element of a local ring: gamma * mu coordinates over Z/p^s. Coordinate
/// j * mu + a is the coefficient of z_j * omega^a, where omega generates R0.
struct RingElem {
  boost::container::small_vector<Coeff, 4> c;

  RingElem() = default;
  explicit RingElem(std::size_t dim) : c(dim, 0) {}
  RingElem(std::initializer_list<Coeff> init) : c(init) {}

  std::size_t size() const noexcept { return c.size(); }
  Coeff operator[](std::size_t i) const { return c[i]; }
  Coeff& operator[](std::size_t i) { return c[i]; }

  friend bool operator==(const RingElem& a, const RingElem& b) { return a.c == b.c; }
  friend bool operator<(const RingElem& a, const RingElem& b) { return a.c < b.c; }
};

struct RingElemHash {
  std::size_t operator()(const RingElem& a) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto x : a.c) h = splitmix64(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

class LocalRing;
using RingPtr = std::shared_ptr<const LocalRing>;

/// A finite commutative local ring R = R0 z_1 + ... + R0 z_gamma, stored as a
/// free Z/p^s-algebra of dimension gamma * mu with an explicit structure
/// tensor. Immutable after construction.
class LocalRing {
 public:
  static constexpr std::uint64_t kDefaultLocalityCap = 1u << 16;

  /// GR(p^s, mu); empty h selects the lexicographically first monic
  /// irreducible of degree mu over F_p.
  static RingPtr galois(Coeff p, unsigned s, unsigned mu = 1, std::vector<Coeff> h = {},
                        std::uint64_t locality_cap = kDefaultLocalityCap);
  static RingPtr integers_mod(Coeff p, unsigned s) { return galois(p, s, 1); }
  /// Z_{p^s}[x]/(g), g monic with coefficients low to high.
  static RingPtr quotient(Coeff p, unsigned s, const std::vector<std::int64_t>& g,
                          std::uint64_t locality_cap = kDefaultLocalityCap);

  const std::string& name() const noexcept { return name_; }
  const GaloisRingParams& base() const noexcept { return base_; }
  const ZMod& zmod() const noexcept { return z_; }
  const FiniteField& residue_field() const noexcept { return field_; }
  Coeff p() const noexcept { return base_.p; }
  unsigned s() const noexcept { return base_.s; }
  unsigned mu() const noexcept { return base_.mu; }
  unsigned gamma() const noexcept { return gamma_; }
  unsigned dim() const noexcept { return dim_; }
  std::uint64_t q() const noexcept { return field_.size(); }
  unsigned upsilon() const noexcept { return upsilon_; }
  /// |R|, or 0 when it does not fit in 64 bits.
  std::uint64_t cardinality() const noexcept { return cardinality_; }
  bool locality_verified() const noexcept { return locality_verified_; }
  /// The defining polynomial for quotient rings (empty for Galois rings).
  const std::vector<Coeff>& defining_poly() const noexcept { return g_; }

  /// z_i z_j = sum_k c[i][j][k] z_k with c[i][j][k] in R0 (mu coefficients).
  std::vector<Coeff> struct_const(unsigned i, unsigned j, unsigned k) const;
  /// p and z_2, ..., z_gamma.
  std::vector<RingElem> maximal_ideal_gens() const;

  RingElem zero() const { return RingElem(dim_); }
  RingElem one() const {
    RingElem e(dim_);
    e[0] = 1;
    return e;
  }
  RingElem from_int(std::int64_t v) const {
    RingElem e(dim_);
    e[0] = z_.reduce(v);
    return e;
  }
  /// Element with the given flat coordinates (reduced).
  RingElem from_coords(const std::vector<std::int64_t>& coords) const;
  /// Basis element z_j * omega^a (flat index j * mu + a).
  RingElem basis_elem(unsigned flat) const {
    RingElem e(dim_);
    e[flat] = 1;
    return e;
  }
  bool is_zero(const RingElem& a) const noexcept {
    for (auto x : a.c)
      if (x != 0) return false;
    return true;
  }
  bool is_one(const RingElem& a) const noexcept {
    if (a.c[0] != 1) return false;
    for (unsigned i = 1; i < dim_; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }
  void check(const RingElem& a) const;  // throws RingMismatch

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem pow(RingElem a, std::uint64_t e) const;
  void add_to(RingElem& acc, const RingElem& b) const;
  /// acc -= a * b
  void sub_mul_to(RingElem& acc, const RingElem& a, const RingElem& b) const;
  /// acc += a * b on raw coordinate arrays of length dim().
  void mul_acc(Coeff* acc, const Coeff* a, const Coeff* b) const;

  FqElem residue(const RingElem& a) const;
  RingElem lift(const FqElem& x) const;
  bool is_unit(const RingElem& a) const;
  RingElem inverse(const RingElem& a) const;  // throws NotAUnit

  /// Matrix of x -> a * x on flat coordinates (column beta = coords of a * e_beta).
  Matrix<Coeff> mult_matrix(const RingElem& a) const;

  RingElem random(Rng& rng) const;
  RingElem random_unit(Rng& rng) const;

  /// Bijection [0, |R|) <-> R for enumeration; requires cardinality() != 0.
  RingElem element(std::uint64_t index) const;
  std::uint64_t index_of(const RingElem& a) const;

  std::string to_string(const RingElem& a) const;

 private:
  struct Term {
    unsigned k;
    Coeff c;
  };

  LocalRing(GaloisRingParams base, unsigned gamma, const std::vector<std::vector<Coeff>>& products,
            std::string name, std::vector<Coeff> g, std::uint64_t locality_cap);
  void validate_algebra() const;
  void check_locality();

  std::string name_;
  GaloisRingParams base_;
  ZMod z_;
  FiniteField field_;
  unsigned gamma_ = 1;
  unsigned dim_ = 1;
  unsigned upsilon_ = 1;
  std::uint64_t cardinality_ = 0;
  bool locality_verified_ = false;
  std::vector<Coeff> g_;
  std::vector<std::vector<Term>> table_;  // index a * dim + b -> product terms
};

/// Text form of an integer polynomial, e.g. "x^2+2*x+3".
std::string poly_to_string(const std::vector<Coeff>& coeffs, char var = 'x');

}  // namespace lrpc
