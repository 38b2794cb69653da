#include "lrpc/local_ring.hpp"

#include <cmath>
#include <sstream>

#include "lrpc/chain_solver.hpp"
#include "lrpc/errors.hpp"

namespace lrpc {

namespace {

using Poly = std::vector<Coeff>;

// a * b mod g over Z/N; g monic of degree D, a and b of length D.
Poly mulmod(const ZMod& z, const Poly& a, const Poly& b, const Poly& g) {
  const std::size_t d = g.size() - 1;
  std::vector<Coeff> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = z.add(prod[i + j], z.mul(a[i], b[j]));
  }
  for (std::size_t k = prod.size(); k-- > d;) {
    const Coeff c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = z.sub(prod[k - d + i], z.mul(c, g[i]));
  }
  prod.resize(d);
  return prod;
}

Poly powmod(const ZMod& z, Poly base, std::uint64_t e, const Poly& g) {
  Poly r(g.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(z, r, base, g);
    base = mulmod(z, base, base, g);
    e >>= 1;
  }
  return r;
}

// Row vector times matrix over Z/N.
Poly row_times(const ZMod& z, const Poly& v, const Matrix<Coeff>& m) {
  Poly out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = z.add(out[j], z.mul(v[i], m(i, j)));
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
  const double bits = exp * std::log2(static_cast<double>(base));
  if (bits >= 63.0) return 0;
  return ipow(base, exp);
}

FqPoly residue_poly(const FiniteField& F, const Poly& g) {
  FqPoly out;
  for (auto c : g) out.push_back(F.from_int(c));
  fqpoly::trim(F, out);
  return out;
}

}  // namespace

std::string poly_to_string(const std::vector<Coeff>& coeffs, char var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Coeff c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

RingPtr LocalRing::galois(Coeff p, unsigned s, unsigned mu, std::vector<Coeff> h, std::uint64_t locality_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0 || mu == 0) throw Error(ErrorCode::MalformedModulus, "Galois ring needs s >= 1 and mu >= 1");
  ZMod z(p, s);
  const FiniteField fp = FiniteField::prime_field(p);
  const bool default_h = h.empty();
  if (default_h) {
    if (mu == 1) {
      h = {0, 1};
    } else {
      auto f = fqpoly::first_irreducible(fp, mu, true);
      if (!f) throw Error(ErrorCode::UnsupportedRing, "no irreducible of degree " + std::to_string(mu) + " found");
      for (const auto& c : *f) h.push_back(c[0]);
    }
  } else {
    if (h.size() != mu + 1 || h.back() % z.modulus() != 1) {
      throw Error(ErrorCode::MalformedModulus, "Galois ring modulus must be monic of degree mu");
    }
    for (auto& c : h) c %= z.modulus();
    if (!fqpoly::is_irreducible(fp, residue_poly(fp, h))) {
      throw Error(ErrorCode::NotIrreducible, "modulus is not irreducible mod p");
    }
  }

  std::vector<std::vector<Coeff>> products(mu * mu);
  for (unsigned a = 0; a < mu; ++a) {
    for (unsigned b = 0; b < mu; ++b) {
      Poly xa(mu, 0), xb(mu, 0);
      xa[a] = 1;
      xb[b] = 1;
      products[a * mu + b] = mu == 1 ? Poly{1} : mulmod(z, xa, xb, h);
    }
  }
  std::string name = mu == 1 ? "Z" + std::to_string(z.modulus())
                             : "GR(" + std::to_string(z.modulus()) + "," + std::to_string(mu) + ")";
  if (!default_h) name += "[h=" + poly_to_string(h, 'X') + "]";
  GaloisRingParams params{p, s, mu, h};
  return RingPtr(new LocalRing(std::move(params), 1, products, std::move(name), {}, locality_cap));
}

RingPtr LocalRing::quotient(Coeff p, unsigned s, const std::vector<std::int64_t>& g_in, std::uint64_t locality_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0) throw Error(ErrorCode::MalformedModulus, "characteristic exponent must be >= 1");
  ZMod z(p, s);
  Poly g;
  for (auto c : g_in) g.push_back(z.reduce(c));
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (g.size() < 2 || g.back() != 1) {
    throw Error(ErrorCode::MalformedModulus, "quotient modulus must be monic of positive degree");
  }
  const unsigned D = static_cast<unsigned>(g.size() - 1);
  const FiniteField fp = FiniteField::prime_field(p);
  auto phi = fqpoly::irreducible_power_root(fp, residue_poly(fp, g));
  if (!phi) throw Error(ErrorCode::NotLocal, poly_to_string(g) + " mod p has several distinct irreducible factors");
  const unsigned mu = static_cast<unsigned>(fqpoly::degree(*phi));
  const unsigned gamma = D / mu;
  const std::uint64_t q = ipow(p, mu);

  // Teichmueller lift of x: the limit of x^(q^k).
  Poly omega(D, 0);
  if (D == 1) {
    omega[0] = z.neg(g[0]);
  } else {
    omega[1] = 1;
  }
  for (int iter = 0;; ++iter) {
    Poly next = powmod(z, omega, q, g);
    if (next == omega) break;
    omega = std::move(next);
    if (iter > 256) throw Error(ErrorCode::UnsupportedRing, "Teichmueller iteration did not converge");
  }

  std::vector<Poly> wpow(mu + 1, Poly(D, 0));
  wpow[0][0] = 1;
  for (unsigned a = 1; a <= mu; ++a) wpow[a] = mulmod(z, wpow[a - 1], omega, g);

  std::vector<Coeff> h;
  if (mu == 1) {
    h = {0, 1};
  } else {
    Matrix<Coeff> w(D, mu);
    for (unsigned a = 0; a < mu; ++a)
      for (unsigned i = 0; i < D; ++i) w(i, a) = wpow[a][i];
    auto sol = chain_solve(z, w, wpow[mu]);
    if (!sol.particular) throw Error(ErrorCode::UnsupportedRing, "minimal polynomial of the Teichmueller lift");
    for (unsigned a = 0; a < mu; ++a) h.push_back(z.neg((*sol.particular)[a]));
    h.push_back(1);
  }

  Poly y(D, 0);
  if (D > 1) y[1] = 1;
  for (unsigned i = 0; i < D; ++i) y[i] = z.sub(y[i], omega[i]);
  if (D == 1) y[0] = z.sub(z.reduce(-static_cast<std::int64_t>(g[0])), omega[0]);

  std::vector<Poly> basis(D);
  Poly ypow(D, 0);
  ypow[0] = 1;
  for (unsigned j = 0; j < gamma; ++j) {
    for (unsigned a = 0; a < mu; ++a) basis[j * mu + a] = mulmod(z, wpow[a], ypow, g);
    ypow = mulmod(z, ypow, y, g);
  }
  Matrix<Coeff> change(D, D);
  for (unsigned u = 0; u < D; ++u)
    for (unsigned i = 0; i < D; ++i) change(u, i) = basis[u][i];
  auto inv = invert_matrix(z, change);
  if (!inv) throw Error(ErrorCode::UnsupportedRing, "could not build a basis over the Galois subring");

  std::vector<std::vector<Coeff>> products(D * D);
  for (unsigned u = 0; u < D; ++u)
    for (unsigned v = 0; v < D; ++v) products[u * D + v] = row_times(z, mulmod(z, basis[u], basis[v], g), *inv);

  std::string name = "Z" + std::to_string(z.modulus()) + "[x]/(" + poly_to_string(g) + ")";
  GaloisRingParams params{p, s, mu, h};
  return RingPtr(new LocalRing(std::move(params), gamma, products, std::move(name), g, locality_cap));
}

LocalRing::LocalRing(GaloisRingParams base, unsigned gamma, const std::vector<std::vector<Coeff>>& products,
                     std::string name, std::vector<Coeff> g, std::uint64_t locality_cap)
    : name_(std::move(name)),
      base_(std::move(base)),
      z_(base_.p, base_.s),
      gamma_(gamma),
      dim_(gamma * base_.mu),
      g_(std::move(g)) {
  std::vector<Coeff> hbar;
  for (auto c : base_.h) hbar.push_back(c % base_.p);
  field_ = FiniteField(base_.p, hbar);
  cardinality_ = checked_power(z_.modulus(), dim_);
  upsilon_ = base_.s * gamma_;

  table_.resize(std::size_t{dim_} * dim_);
  for (std::size_t ab = 0; ab < table_.size(); ++ab) {
    for (unsigned k = 0; k < dim_; ++k) {
      if (products[ab][k] != 0) table_[ab].push_back({k, products[ab][k]});
    }
  }
  validate_algebra();
  if (cardinality_ != 0 && cardinality_ <= locality_cap) check_locality();
}

void LocalRing::validate_algebra() const {
  for (unsigned b = 0; b < dim_; ++b) {
    if (!(mul(one(), basis_elem(b)) == basis_elem(b))) {
      throw Error(ErrorCode::MalformedModulus, name_ + ": z_1 is not the identity");
    }
  }
  for (unsigned a = 0; a < dim_; ++a) {
    for (unsigned b = a; b < dim_; ++b) {
      const RingElem ab = mul(basis_elem(a), basis_elem(b));
      if (!(ab == mul(basis_elem(b), basis_elem(a)))) {
        throw Error(ErrorCode::MalformedModulus, name_ + ": structure constants are not symmetric");
      }
      for (unsigned c = 0; c < dim_; ++c) {
        if (!(mul(ab, basis_elem(c)) == mul(basis_elem(a), mul(basis_elem(b), basis_elem(c))))) {
          throw Error(ErrorCode::MalformedModulus, name_ + ": structure constants are not associative");
        }
      }
    }
  }
  for (unsigned j = 1; j < gamma_; ++j) {
    if (!is_zero(pow(basis_elem(j * mu()), upsilon_))) {
      throw Error(ErrorCode::NotLocal, name_ + ": basis element z_" + std::to_string(j + 1) + " is not nilpotent");
    }
  }
}

void LocalRing::check_locality() {
  for (std::uint64_t idx = 0; idx < cardinality_; ++idx) {
    const RingElem a = element(idx);
    if (field_.is_zero(residue(a))) {
      if (!is_zero(pow(a, upsilon_))) throw Error(ErrorCode::NotLocal, name_ + ": non-unit that is not nilpotent");
    } else if (dim_ > 1 && !invert_matrix(z_, mult_matrix(a))) {
      throw Error(ErrorCode::NotLocal, name_ + ": residue is nonzero but element is not a unit");
    }
  }
  locality_verified_ = true;
}

std::vector<Coeff> LocalRing::struct_const(unsigned i, unsigned j, unsigned k) const {
  const RingElem prod = mul(basis_elem(i * mu()), basis_elem(j * mu()));
  return {prod.c.begin() + k * mu(), prod.c.begin() + (k + 1) * mu()};
}

std::vector<RingElem> LocalRing::maximal_ideal_gens() const {
  std::vector<RingElem> gens;
  gens.push_back(from_int(p()));
  for (unsigned j = 1; j < gamma_; ++j) gens.push_back(basis_elem(j * mu()));
  return gens;
}

RingElem LocalRing::from_coords(const std::vector<std::int64_t>& coords) const {
  if (coords.size() > dim_) throw Error(ErrorCode::RingMismatch, "too many coordinates for " + name_);
  RingElem e(dim_);
  for (std::size_t i = 0; i < coords.size(); ++i) e[i] = z_.reduce(coords[i]);
  return e;
}

void LocalRing::check(const RingElem& a) const {
  if (a.size() != dim_) throw Error(ErrorCode::RingMismatch, "element does not belong to " + name_);
}

RingElem LocalRing::add(const RingElem& a, const RingElem& b) const {
  RingElem r(dim_);
  for (unsigned i = 0; i < dim_; ++i) r[i] = z_.add(a[i], b[i]);
  return r;
}

RingElem LocalRing::sub(const RingElem& a, const RingElem& b) const {
  RingElem r(dim_);
  for (unsigned i = 0; i < dim_; ++i) r[i] = z_.sub(a[i], b[i]);
  return r;
}

RingElem LocalRing::neg(const RingElem& a) const {
  RingElem r(dim_);
  for (unsigned i = 0; i < dim_; ++i) r[i] = z_.neg(a[i]);
  return r;
}

void LocalRing::mul_acc(Coeff* acc, const Coeff* a, const Coeff* b) const {
  if (dim_ == 1) {
    acc[0] = z_.add(acc[0], z_.mul(a[0], b[0]));
    return;
  }
  for (unsigned i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Coeff ab = z_.mul(a[i], b[j]);
      for (const Term& t : table_[i * dim_ + j]) acc[t.k] = z_.add(acc[t.k], z_.mul(ab, t.c));
    }
  }
}

RingElem LocalRing::mul(const RingElem& a, const RingElem& b) const {
  RingElem r(dim_);
  mul_acc(r.c.data(), a.c.data(), b.c.data());
  return r;
}

RingElem LocalRing::pow(RingElem a, std::uint64_t e) const {
  RingElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void LocalRing::add_to(RingElem& acc, const RingElem& b) const {
  for (unsigned i = 0; i < dim_; ++i) acc[i] = z_.add(acc[i], b[i]);
}

void LocalRing::sub_mul_to(RingElem& acc, const RingElem& a, const RingElem& b) const {
  if (dim_ == 1) {
    acc[0] = z_.sub(acc[0], z_.mul(a[0], b[0]));
    return;
  }
  const RingElem prod = mul(a, b);
  for (unsigned i = 0; i < dim_; ++i) acc[i] = z_.sub(acc[i], prod[i]);
}

FqElem LocalRing::residue(const RingElem& a) const {
  FqElem r(mu());
  for (unsigned i = 0; i < mu(); ++i) r[i] = a[i] % p();
  return r;
}

RingElem LocalRing::lift(const FqElem& x) const {
  RingElem r(dim_);
  for (unsigned i = 0; i < mu(); ++i) r[i] = x[i];
  return r;
}

bool LocalRing::is_unit(const RingElem& a) const {
  for (unsigned i = 0; i < mu(); ++i)
    if (a[i] % p() != 0) return true;
  return false;
}

RingElem LocalRing::inverse(const RingElem& a) const {
  if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, to_string(a) + " is not a unit of " + name_);
  if (dim_ == 1) return RingElem{z_.inverse(a[0])};
  auto inv = invert_matrix(z_, mult_matrix(a));
  if (!inv) throw Error(ErrorCode::NotAUnit, to_string(a) + " is not a unit of " + name_);
  RingElem r(dim_);
  for (unsigned i = 0; i < dim_; ++i) r[i] = (*inv)(i, 0);
  return r;
}

Matrix<Coeff> LocalRing::mult_matrix(const RingElem& a) const {
  Matrix<Coeff> m(dim_, dim_, 0);
  for (unsigned b = 0; b < dim_; ++b) {
    const RingElem col = mul(a, basis_elem(b));
    for (unsigned i = 0; i < dim_; ++i) m(i, b) = col[i];
  }
  return m;
}

RingElem LocalRing::random(Rng& rng) const {
  RingElem r(dim_);
  for (auto& c : r.c) c = static_cast<Coeff>(uniform_below(rng, z_.modulus()));
  return r;
}

RingElem LocalRing::random_unit(Rng& rng) const {
  for (;;) {
    RingElem r = random(rng);
    if (is_unit(r)) return r;
  }
}

RingElem LocalRing::element(std::uint64_t index) const {
  RingElem r(dim_);
  for (unsigned i = 0; i < dim_; ++i) {
    r[i] = static_cast<Coeff>(index % z_.modulus());
    index /= z_.modulus();
  }
  return r;
}

std::uint64_t LocalRing::index_of(const RingElem& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = dim_; i-- > 0;) idx = idx * z_.modulus() + a[i];
  return idx;
}

std::string LocalRing::to_string(const RingElem& a) const {
  if (dim_ == 1) return std::to_string(a[0]);
  // Name y after x when the Teichmueller part is trivial (omega = 0).
  const bool plain_x = mu() == 1;
  std::ostringstream out;
  bool first = true;
  for (unsigned j = 0; j < gamma_; ++j) {
    for (unsigned b = 0; b < mu(); ++b) {
      const Coeff c = a[j * mu() + b];
      if (c == 0) continue;
      if (!first) out << '+';
      first = false;
      std::string mono;
      if (b > 0) mono += b == 1 ? "w" : "w^" + std::to_string(b);
      if (j > 0) {
        if (!mono.empty()) mono += '*';
        mono += plain_x ? "x" : "y";
        if (j > 1) mono += "^" + std::to_string(j);
      }
      if (mono.empty()) {
        out << c;
      } else if (c == 1) {
        out << mono;
      } else {
        out << c << '*' << mono;
      }
    }
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace lrpc
