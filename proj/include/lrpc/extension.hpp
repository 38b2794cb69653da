#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrpc/local_ring.hpp"

namespace lrpc {

/// Element of S = R[theta]/(f): m coordinates over R, each dim(R) wide.
/// Flat index i * dim(R) + t is coordinate t of the coefficient of theta^i.
struct ExtElem {
  std::vector<Coeff> c;

  ExtElem() = default;
  explicit ExtElem(std::size_t flat) : c(flat, 0) {}

  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c == b.c; }
  friend bool operator<(const ExtElem& a, const ExtElem& b) { return a.c < b.c; }
};

struct ExtElemHash {
  std::size_t operator()(const ExtElem& a) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto x : a.c) h = splitmix64(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

class Extension;
using ExtPtr = std::shared_ptr<const Extension>;

/// Galois extension S of degree m over a local ring R.
class Extension {
 public:
  /// f: monic polynomial of degree m over R, coefficients low to high. When
  /// omitted, the default modulus of default_modulus() is used.
  static ExtPtr create(RingPtr ring, unsigned m, std::optional<std::vector<RingElem>> f = std::nullopt);
  /// Lexicographically first monic irreducible of degree m over F_q, preferring
  /// coefficients in F_p, lifted to R.
  static std::vector<RingElem> default_modulus(const LocalRing& ring, unsigned m);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const LocalRing& ring() const noexcept { return *ring_; }
  unsigned m() const noexcept { return m_; }
  unsigned flat_dim() const noexcept { return m_ * d_; }
  const std::vector<RingElem>& modulus() const noexcept { return f_; }
  /// "ext m=<m> f=<poly>" for moduli with integer coefficients.
  std::string spec() const;

  ExtElem zero() const { return ExtElem(flat_dim()); }
  ExtElem one() const {
    ExtElem e(flat_dim());
    e.c[0] = 1;
    return e;
  }
  ExtElem theta_power(unsigned i) const;
  ExtElem from_ring(const RingElem& r) const;
  RingElem coord(const ExtElem& a, unsigned i) const;
  void set_coord(ExtElem& a, unsigned i, const RingElem& r) const;
  bool is_zero(const ExtElem& a) const noexcept {
    for (auto x : a.c)
      if (x != 0) return false;
    return true;
  }
  void check(const ExtElem& a) const;  // throws ExtensionMismatch

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  /// a * r for r in R.
  ExtElem scale(const ExtElem& a, const RingElem& r) const;
  void add_to(ExtElem& acc, const ExtElem& b) const;
  /// acc -= a * b
  void sub_mul_to(ExtElem& acc, const ExtElem& a, const ExtElem& b) const;
  /// acc += a * b
  void add_mul_to(ExtElem& acc, const ExtElem& a, const ExtElem& b) const;

  bool is_unit(const ExtElem& a) const;
  ExtElem inverse(const ExtElem& a) const;  // throws NotAUnit

  std::vector<RingElem> vec_rep(const ExtElem& a) const;
  ExtElem unrep(const std::vector<RingElem>& v) const;

  ExtElem random(Rng& rng) const;
  ExtElem random_unit(Rng& rng) const;

  /// |S|, or 0 when it does not fit in 64 bits.
  std::uint64_t cardinality() const noexcept;
  ExtElem element(std::uint64_t index) const;

  std::string to_string(const ExtElem& a) const;

 private:
  Extension(RingPtr ring, unsigned m, std::vector<RingElem> f);
  void reduce(std::vector<Coeff>& prod) const;  // length (2m-1) * d -> m * d

  RingPtr ring_;
  unsigned m_;
  unsigned d_;
  std::vector<RingElem> f_;
  std::vector<Coeff> f_flat_;  // low coefficients of f, m * d
};

}  // namespace lrpc
