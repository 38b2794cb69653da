#include "lrpc/extension.hpp"

#include "lrpc/chain_solver.hpp"
#include "lrpc/errors.hpp"

namespace lrpc {

std::vector<RingElem> Extension::default_modulus(const LocalRing& ring, unsigned m) {
  if (m == 0) throw Error(ErrorCode::MalformedModulus, "extension degree must be >= 1");
  const FiniteField& F = ring.residue_field();
  auto f = fqpoly::first_irreducible(F, m, true);
  if (!f) f = fqpoly::first_irreducible(F, m, false);
  if (!f) throw Error(ErrorCode::UnsupportedRing, "no irreducible of degree " + std::to_string(m) + " found");
  std::vector<RingElem> out;
  for (const auto& c : *f) out.push_back(ring.lift(c));
  return out;
}

ExtPtr Extension::create(RingPtr ring, unsigned m, std::optional<std::vector<RingElem>> f) {
  if (!ring) throw Error(ErrorCode::RingMismatch, "extension needs a base ring");
  if (m == 0) throw Error(ErrorCode::MalformedModulus, "extension degree must be >= 1");
  std::vector<RingElem> poly = f ? std::move(*f) : default_modulus(*ring, m);
  if (poly.size() != m + 1) throw Error(ErrorCode::MalformedModulus, "extension modulus must have degree m");
  for (const auto& c : poly) ring->check(c);
  if (!ring->is_one(poly.back())) throw Error(ErrorCode::MalformedModulus, "extension modulus must be monic");
  const FiniteField& F = ring->residue_field();
  FqPoly residue;
  for (const auto& c : poly) residue.push_back(ring->residue(c));
  if (!fqpoly::is_irreducible(F, residue)) {
    throw Error(ErrorCode::NotIrreducible, "extension modulus is not irreducible over the residue field");
  }
  return ExtPtr(new Extension(std::move(ring), m, std::move(poly)));
}

Extension::Extension(RingPtr ring, unsigned m, std::vector<RingElem> f)
    : ring_(std::move(ring)), m_(m), d_(ring_->dim()), f_(std::move(f)), f_flat_(m_ * d_, 0) {
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned t = 0; t < d_; ++t) f_flat_[i * d_ + t] = f_[i][t];
}

std::string Extension::spec() const {
  std::string out = "ext m=" + std::to_string(m_);
  std::vector<Coeff> ints;
  for (const auto& c : f_) {
    for (unsigned t = 1; t < d_; ++t)
      if (c[t] != 0) return out;
    ints.push_back(c[0]);
  }
  return out + " f=" + poly_to_string(ints);
}

ExtElem Extension::theta_power(unsigned i) const {
  ExtElem x = one();
  if (m_ == 1) {
    // theta = -f_0
    ExtElem t = from_ring(ring_->neg(f_[0]));
    for (unsigned k = 0; k < i; ++k) x = mul(x, t);
    return x;
  }
  ExtElem t = zero();
  t.c[d_] = 1;
  for (unsigned k = 0; k < i; ++k) x = mul(x, t);
  return x;
}

ExtElem Extension::from_ring(const RingElem& r) const {
  ExtElem e = zero();
  for (unsigned t = 0; t < d_; ++t) e.c[t] = r[t];
  return e;
}

RingElem Extension::coord(const ExtElem& a, unsigned i) const {
  RingElem r(d_);
  for (unsigned t = 0; t < d_; ++t) r[t] = a.c[i * d_ + t];
  return r;
}

void Extension::set_coord(ExtElem& a, unsigned i, const RingElem& r) const {
  for (unsigned t = 0; t < d_; ++t) a.c[i * d_ + t] = r[t];
}

void Extension::check(const ExtElem& a) const {
  if (a.c.size() != flat_dim()) throw Error(ErrorCode::ExtensionMismatch, "element does not belong to this extension");
}

ExtElem Extension::add(const ExtElem& a, const ExtElem& b) const {
  const ZMod& z = ring_->zmod();
  ExtElem r(flat_dim());
  for (unsigned i = 0; i < flat_dim(); ++i) r.c[i] = z.add(a.c[i], b.c[i]);
  return r;
}

ExtElem Extension::sub(const ExtElem& a, const ExtElem& b) const {
  const ZMod& z = ring_->zmod();
  ExtElem r(flat_dim());
  for (unsigned i = 0; i < flat_dim(); ++i) r.c[i] = z.sub(a.c[i], b.c[i]);
  return r;
}

ExtElem Extension::neg(const ExtElem& a) const {
  const ZMod& z = ring_->zmod();
  ExtElem r(flat_dim());
  for (unsigned i = 0; i < flat_dim(); ++i) r.c[i] = z.neg(a.c[i]);
  return r;
}

void Extension::reduce(std::vector<Coeff>& prod) const {
  const ZMod& z = ring_->zmod();
  if (d_ == 1) {
    for (unsigned k = 2 * m_ - 1; k-- > m_;) {
      const Coeff c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < m_; ++i) {
        if (f_flat_[i] != 0) prod[k - m_ + i] = z.sub(prod[k - m_ + i], z.mul(c, f_flat_[i]));
      }
    }
  } else {
    std::vector<Coeff> tmp(d_);
    for (unsigned k = 2 * m_ - 1; k-- > m_;) {
      const Coeff* c = &prod[k * d_];
      bool nonzero = false;
      for (unsigned t = 0; t < d_; ++t) nonzero |= c[t] != 0;
      if (!nonzero) continue;
      std::vector<Coeff> lead(c, c + d_);
      std::fill(prod.begin() + k * d_, prod.begin() + (k + 1) * d_, 0);
      for (unsigned i = 0; i < m_; ++i) {
        std::fill(tmp.begin(), tmp.end(), 0);
        ring_->mul_acc(tmp.data(), lead.data(), &f_flat_[i * d_]);
        Coeff* dst = &prod[(k - m_ + i) * d_];
        for (unsigned t = 0; t < d_; ++t) dst[t] = z.sub(dst[t], tmp[t]);
      }
    }
  }
  prod.resize(m_ * d_);
}

void Extension::add_mul_to(ExtElem& acc, const ExtElem& a, const ExtElem& b) const {
  const ZMod& z = ring_->zmod();
  std::vector<Coeff> prod((2 * m_ - 1) * d_, 0);
  if (d_ == 1) {
    const std::uint64_t n = z.modulus();
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint64_t ai = a.c[i];
      if (ai == 0) continue;
      for (unsigned j = 0; j < m_; ++j) {
        if (b.c[j] == 0) continue;
        prod[i + j] = static_cast<Coeff>((prod[i + j] + ai * b.c[j]) % n);
      }
    }
  } else {
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) ring_->mul_acc(&prod[(i + j) * d_], &a.c[i * d_], &b.c[j * d_]);
  }
  reduce(prod);
  for (unsigned i = 0; i < flat_dim(); ++i) acc.c[i] = z.add(acc.c[i], prod[i]);
}

ExtElem Extension::mul(const ExtElem& a, const ExtElem& b) const {
  ExtElem r(flat_dim());
  add_mul_to(r, a, b);
  return r;
}

void Extension::sub_mul_to(ExtElem& acc, const ExtElem& a, const ExtElem& b) const {
  const ZMod& z = ring_->zmod();
  const ExtElem prod = mul(a, b);
  for (unsigned i = 0; i < flat_dim(); ++i) acc.c[i] = z.sub(acc.c[i], prod.c[i]);
}

ExtElem Extension::scale(const ExtElem& a, const RingElem& r) const {
  ExtElem out(flat_dim());
  for (unsigned i = 0; i < m_; ++i) ring_->mul_acc(&out.c[i * d_], &a.c[i * d_], r.c.data());
  return out;
}

void Extension::add_to(ExtElem& acc, const ExtElem& b) const {
  const ZMod& z = ring_->zmod();
  for (unsigned i = 0; i < flat_dim(); ++i) acc.c[i] = z.add(acc.c[i], b.c[i]);
}

bool Extension::is_unit(const ExtElem& a) const {
  for (unsigned i = 0; i < m_; ++i)
    if (ring_->is_unit(coord(a, i))) return true;
  return false;
}

ExtElem Extension::inverse(const ExtElem& a) const {
  if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, to_string(a) + " is not a unit of the extension");
  // Matrix of x -> a * x on the flat Z/p^s coordinates.
  const unsigned n = flat_dim();
  Matrix<Coeff> mat(n, n, 0);
  ExtElem basis = zero();
  for (unsigned col = 0; col < n; ++col) {
    basis.c.assign(n, 0);
    basis.c[col] = 1;
    const ExtElem prod = mul(a, basis);
    for (unsigned i = 0; i < n; ++i) mat(i, col) = prod.c[i];
  }
  auto inv = invert_matrix(ring_->zmod(), mat);
  if (!inv) throw Error(ErrorCode::NotAUnit, to_string(a) + " is not a unit of the extension");
  ExtElem r(n);
  for (unsigned i = 0; i < n; ++i) r.c[i] = (*inv)(i, 0);
  return r;
}

std::vector<RingElem> Extension::vec_rep(const ExtElem& a) const {
  std::vector<RingElem> v;
  v.reserve(m_);
  for (unsigned i = 0; i < m_; ++i) v.push_back(coord(a, i));
  return v;
}

ExtElem Extension::unrep(const std::vector<RingElem>& v) const {
  if (v.size() != m_) throw Error(ErrorCode::ExtensionMismatch, "vector length differs from the extension degree");
  ExtElem e = zero();
  for (unsigned i = 0; i < m_; ++i) {
    ring_->check(v[i]);
    set_coord(e, i, v[i]);
  }
  return e;
}

ExtElem Extension::random(Rng& rng) const {
  ExtElem e(flat_dim());
  for (auto& c : e.c) c = static_cast<Coeff>(uniform_below(rng, ring_->zmod().modulus()));
  return e;
}

ExtElem Extension::random_unit(Rng& rng) const {
  for (;;) {
    ExtElem e = random(rng);
    if (is_unit(e)) return e;
  }
}

std::uint64_t Extension::cardinality() const noexcept {
  const std::uint64_t r = ring_->cardinality();
  if (r == 0) return 0;
  std::uint64_t out = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (out > UINT64_MAX / r) return 0;
    out *= r;
  }
  return out;
}

ExtElem Extension::element(std::uint64_t index) const {
  ExtElem e(flat_dim());
  const Coeff n = ring_->zmod().modulus();
  for (auto& c : e.c) {
    c = static_cast<Coeff>(index % n);
    index /= n;
  }
  return e;
}

std::string Extension::to_string(const ExtElem& a) const {
  std::string out;
  for (unsigned i = m_; i-- > 0;) {
    const RingElem c = coord(a, i);
    if (ring_->is_zero(c)) continue;
    if (!out.empty()) out += '+';
    std::string cs = ring_->to_string(c);
    const bool compound = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (compound) {
      out += "(" + cs + ")*";
    } else if (cs != "1") {
      out += cs + "*";
    }
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace lrpc
